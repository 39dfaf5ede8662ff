// Exact Euler genus by branch and bound over embeddings.
//
// The search inserts edges one at a time, maintaining the faces of the
// partial embedding. Inserting an edge whose endpoints lie on a common face
// either splits that face (genus unchanged) or, placed with a sign twist,
// merges the face with itself (genus + 1); endpoints on distinct faces force
// a merge (genus + 2). Iterative deepening on the target genus with these
// increments prunes almost everything at the genera this library cares
// about. Signatures are implicitly normalized to +1 on a spanning tree.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cascade/cache.hpp"
#include "cascade/embedding.hpp"
#include "cascade/graph.hpp"

namespace cascade {

struct TimeoutError : GraphError {
  using GraphError::GraphError;
};

struct GenusOptions {
  bool use_blocks = true;             // sum over blocks instead of one search
  bool use_two_kuratowski_bound = true;
  bool want_witness = true;           // skip witness assembly in hot loops
  int timeout_ms = 60000;             // per call; 0 disables the deadline
  // Decision cap: genera above this are reported as genus_cap + 1 without
  // being pinned down exactly (and without a witness). Threshold tests
  // become much cheaper than exact evaluation.
  int genus_cap = 1 << 20;
  GenusCache* cache = nullptr;
};

struct GenusResult {
  int genus = 0;
  // Witness embedding attaining `genus`; present for connected inputs when
  // requested.
  std::optional<Embedding> witness;
  // Which bound closed the search: "planar", "density", "bipartite-density",
  // "nonplanarity", "disjoint-kuratowski", "disjoint-kgraph", "cache",
  // "block-sum", or "search".
  std::string lower_bound_trace;
};

// Exact Euler genus. Computed per block and summed; each block runs
// iterative deepening from the best cheap lower bound.
GenusResult euler_genus(const LabeledGraph& g, const GenusOptions& opt = {});

// Euler genus of the augmented graph; requires terminals.
GenusResult euler_genus_plus(const LabeledGraph& g, const GenusOptions& opt = {});

// Decision variant: is there an embedding of connected g with genus <= target?
// Returns the witness if so.
std::optional<Embedding> genus_at_most(const LabeledGraph& g, int target,
                                       const GenusOptions& opt = {});

// Sound lower bound: Euler density (with the bipartite refinement),
// nonplanarity, two disjoint Kuratowski-or-K-graph witnesses, summed over
// blocks. Never exceeds the exact genus.
int genus_lower_bound(const LabeledGraph& g);

// Enumerates all embeddings of connected g with genus <= cap, invoking the
// callback on each (embedding, genus). The callback returns false to stop.
// Exposed for the planar-embedding scans and for exhaustive cross-checks.
void enumerate_embeddings(
    const LabeledGraph& g, int cap,
    const std::function<bool(const Embedding&, int)>& visit,
    const GenusOptions& opt = {});

}  // namespace cascade
