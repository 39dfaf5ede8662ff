// Planarity testing and Kuratowski subgraph extraction.
#pragma once

#include <optional>

#include "cascade/embedding.hpp"
#include "cascade/graph.hpp"

namespace cascade {

bool is_planar(const LabeledGraph& g);

// A planar rotation system (all-positive signature) when g is planar.
std::optional<Embedding> planar_embedding(const LabeledGraph& g);

// A subgraph of g homeomorphic to K5 or K3,3 (edge-minimal, found by pruning
// edges in a fixed order), or nothing when g is planar. The result keeps g's
// vertex count; unused vertices are simply isolated.
std::optional<LabeledGraph> find_kuratowski(const LabeledGraph& g);

// Kind probe for a Kuratowski subdivision: true if it is a K5 subdivision
// (five branch vertices of degree 4), false for K3,3.
bool kuratowski_is_k5(const LabeledGraph& subdivision);

}  // namespace cascade
