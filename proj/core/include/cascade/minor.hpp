// Minor containment at desk scale: branch-set backtracking.
#pragma once

#include "cascade/graph.hpp"

namespace cascade {

// True iff `h` can be obtained from `g` by a sequence of minor operations
// respecting the terminal rules: branch sets of h's terminals contain g's
// terminals (the x/y swap is allowed). A terminal-labeled pattern is never a
// minor of an unlabeled host and vice versa.
bool is_minor(const LabeledGraph& h, const LabeledGraph& g);

// True iff the host contains a subdivision of the pattern: an injective map
// of pattern vertices plus internally disjoint paths realizing its edges.
// Terminals map to terminals (swap allowed) when both sides carry them.
bool contains_subdivision(const LabeledGraph& pattern,
                          const LabeledGraph& host);

}  // namespace cascade
