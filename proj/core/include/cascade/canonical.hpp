// Canonical forms under terminal-respecting isomorphism.
//
// Two labeled graphs are isomorphic here when some bijection of the vertex
// sets preserves adjacency and maps terminals onto terminals, possibly
// exchanging x and y. Both terminals therefore share a single color class.
#pragma once

#include <string>

#include "cascade/graph.hpp"

namespace cascade {

struct CanonicalForm {
  // n, one packed terminal-flag bit row, then the upper-triangle adjacency
  // bits of the canonically relabeled graph. Equal codes <=> isomorphic.
  std::string canonical_code;
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const LabeledGraph& g);

// Canonical form of the underlying terminal-free graph (cache key for genus).
CanonicalForm canonical_form_underlying(const LabeledGraph& g);

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Printable key for cache files and JSON.
std::string code_hex(const CanonicalForm& cf);

}  // namespace cascade
