// U-linkages of K-graph cores and the separation number of disjoint
// terminal K-graphs.
#pragma once

#include <optional>
#include <vector>

#include "cascade/kgraph.hpp"

namespace cascade {

struct WitnessesNotDisjointError : GraphError {
  using GraphError::GraphError;
};

struct Foot {
  int u = -1;
  std::vector<int> path;  // u up to the first vertex of degree >= 3
  bool removable = false;
};

struct LinkageWitness {
  KGraphWitness core;
  std::vector<int> linked_to;  // U
  std::vector<Foot> feet;
};

// Checks that g is a U-linkage of the core: |U| pairwise disjoint paths from
// the boundary cycle to U internally disjoint from the core, plus an access
// path from every boundary branch vertex (K4) or nonempty open boundary
// branch (K2,3) to U. Computes feet and removable flags.
std::optional<LinkageWitness> check_linkage(const LabeledGraph& g,
                                            const KGraphWitness& core,
                                            const std::vector<int>& u_set);

struct SeparationResult {
  int k = 0;  // max disjoint boundary-to-boundary paths
  std::vector<int> blocking_set;
  // Which augmented set blocks: 0 = the cut alone both ways, 1 = cut + x on
  // one side, 2 = cut + y.
  int blocking_case = 0;
};

// Separation number of two vertex-disjoint terminal K-graphs: unit-vertex-
// capacity max-flow between the boundary cycles, internally disjoint from
// both cores.
SeparationResult separation_number(const LabeledGraph& g,
                                   const KGraphWitness& lx,
                                   const KGraphWitness& ly);

}  // namespace cascade
