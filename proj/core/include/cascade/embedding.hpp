// Combinatorial embeddings: rotation systems with edge signatures, and
// facial-walk tracing.
#pragma once

#include <utility>
#include <vector>

#include "cascade/graph.hpp"

namespace cascade {

struct DisconnectedGraphError : GraphError {
  using GraphError::GraphError;
};

// A dart is a directed edge occurrence u -> v.
using Dart = std::pair<int, int>;

// Rotation system plus signature. rotation[v] lists the neighbors of v in
// cyclic order; an edge uv has signature -1 iff bit v of negative[u] is set
// (the mask is kept symmetric).
struct Embedding {
  std::vector<std::vector<int>> rotation;
  std::vector<VertexSet> negative;

  Embedding() = default;
  explicit Embedding(int n) : rotation(n), negative(n, 0) {}

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  bool edge_negative(int u, int v) const { return (negative[u] >> v) & 1; }
  void set_negative(int u, int v, bool neg) {
    if (neg) {
      negative[u] |= vbit(v);
      negative[v] |= vbit(u);
    } else {
      negative[u] &= ~vbit(v);
      negative[v] &= ~vbit(u);
    }
  }
};

struct FaceSet {
  // One closed walk per face, as dart sequences. Every edge is traversed
  // exactly twice across all faces.
  std::vector<std::vector<Dart>> faces;
  int count() const { return static_cast<int>(faces.size()); }
};

// Checks that rotation[v] is a permutation of v's neighbors for every v and
// that the signature mask is symmetric and supported on edges.
bool embedding_well_formed(const LabeledGraph& g, const Embedding& emb);

// Facial walks of a connected embedded graph. Throws DisconnectedGraphError
// on disconnected input.
FaceSet trace_faces(const LabeledGraph& g, const Embedding& emb);

// 2 - |V| + |E| - |F|, always >= 0 for connected graphs.
int euler_genus_of_embedding(const LabeledGraph& g, const Embedding& emb);

// Any embedding at all (identity rotations, positive signature).
Embedding default_embedding(const LabeledGraph& g);

}  // namespace cascade
