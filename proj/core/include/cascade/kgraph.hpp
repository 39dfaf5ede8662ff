// K-graphs: subgraphs homeomorphic to K4 or K2,3 certified by a principal
// bridge, their terminal-positioned variants, and disjoint-pair search.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cascade/graph.hpp"
#include "cascade/structure.hpp"

namespace cascade {

struct KGraphWitness {
  enum Kind { K4, K23 };
  Kind kind = K4;
  std::vector<int> branch_vertices;        // 4 for K4, 2 for K2,3
  std::vector<std::vector<int>> branches;  // paths with endpoints; 6 or 3
  int terminal = -1;                       // z for terminal-positioned cores
  std::vector<int> boundary;               // boundary cycle (empty when plain)
  VertexSet vertices = 0;
  std::vector<Edge> edges;
  VertexSet interior = 0;                  // z plus its open branches
  std::vector<int> principal_attachments;  // of the certifying bridge

  Subgraph subgraph() const {
    Subgraph s;
    s.vertices = vertices;
    s.edges = edges;
    return s;
  }
};

// All z-K-graphs of g up to `cap`: subgraphs of g homeomorphic to K4 with z
// a branch vertex, or to K2,3 with z on an open branch, that are K-graphs in
// the augmented graph. Requires terminals; z must be one of them.
std::vector<KGraphWitness> find_k_graphs(const LabeledGraph& g, int z,
                                         size_t cap = 100000);

// Vertex-disjoint (x-K-graph, y-K-graph) pair; each side is shrunk until no
// properly contained witness remains.
std::optional<std::pair<KGraphWitness, KGraphWitness>> disjoint_xy_k_graphs(
    const LabeledGraph& g, size_t cap = 100000);

// Plain K-graphs (no terminal positioning) certified within g itself.
std::vector<KGraphWitness> find_plain_k_graphs(const LabeledGraph& g,
                                               VertexSet allowed,
                                               size_t cap = 100000);

}  // namespace cascade
