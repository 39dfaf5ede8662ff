// Bridge decompositions, overlap graphs, separating cycles, face-distance,
// and the disk-extension test.
#pragma once

#include <optional>
#include <vector>

#include "cascade/embedding.hpp"
#include "cascade/graph.hpp"

namespace cascade {

struct NotASubgraphError : GraphError {
  using GraphError::GraphError;
};
struct NotACycleError : GraphError {
  using GraphError::GraphError;
};
struct NonplanarInputError : GraphError {
  using GraphError::GraphError;
};

// A subgraph of some ambient graph, sharing its vertex numbering.
struct Subgraph {
  VertexSet vertices = 0;
  std::vector<Edge> edges;

  bool contains_vertex(int v) const { return (vertices >> v) & 1; }
  bool contains_edge(Edge e) const;
  static Subgraph of_cycle(const std::vector<int>& cycle);
  static Subgraph of_graph(const LabeledGraph& g);
};

struct HBridge {
  VertexSet vertices;            // attachments plus interior
  VertexSet interior;            // vertices off the host
  std::vector<Edge> edges;
  std::vector<int> attachments;  // sorted host vertices
  bool trivial = false;          // single edge with both ends in the host
};

struct BridgeDecomposition {
  std::vector<HBridge> bridges;
};

// H-bridges of `host` in g: chords of the host plus components of g - V(host)
// with their incident edges. Ordered by smallest contained vertex.
BridgeDecomposition bridges(const LabeledGraph& g, const Subgraph& host);

struct OverlapEdge {
  int a = 0, b = 0;
  bool skew = false;          // interlaced attachment quadruple on the cycle
  bool three_common = false;  // at least three shared attachments
};

struct OverlapGraph {
  BridgeDecomposition decomposition;
  std::vector<OverlapEdge> edges;
};

// Overlap graph of the C-bridges, C given as a vertex cycle.
OverlapGraph overlap_graph(const LabeledGraph& g, const std::vector<int>& cycle);

// True iff u and v lie in C-bridges at odd distance in the overlap graph.
// Vertices on C, or in different components of the overlap graph, are
// reported as not separated.
bool separates(const LabeledGraph& g, const std::vector<int>& cycle, int u,
               int v);

// Exact maximum number of pairwise vertex-disjoint (x,y)-separating cycles,
// by brute force over cycle families. Desk scale only.
int max_disjoint_separating_cycles(const LabeledGraph& g, int x, int y);

struct FaceDistanceResult {
  int distance = 0;
  Embedding witness_embedding;
  FaceSet witness_faces;
  std::vector<int> chain_vertices;  // distance+2 entries, x ... y
  std::vector<int> chain_faces;     // distance+1 indices into witness_faces
};

// Minimum face-distance between x and y over all planar embeddings of g.
// Exact: enumerates embeddings per 2-connected block along the block path.
FaceDistanceResult face_distance(const LabeledGraph& g, int x, int y);

enum class DiskObstruction { None, CrossingPaths, Tripod, KuratowskiOtherBlock };

struct DiskResult {
  bool embeddable = false;
  DiskObstruction obstruction = DiskObstruction::None;
};

// Can g be drawn in the plane with `cycle` bounding a face? Decided by
// planarity of g plus an apex joined to the whole cycle; failures are
// classified by obstruction kind.
DiskResult disk_embeddable(const LabeledGraph& g, const std::vector<int>& cycle);

// True when g holds two vertex-disjoint witnesses certifying genus >= 2:
// two disjoint Kuratowski subgraphs or two disjoint K-graphs.
bool has_two_disjoint_genus_witnesses(const LabeledGraph& g);

}  // namespace cascade
