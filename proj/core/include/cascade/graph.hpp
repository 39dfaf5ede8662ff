// Terminal-labeled simple graphs and minor operations.
//
// Graphs are immutable values: every operation returns a new graph. Vertices
// are always 0..n-1; vertex sets are 64-bit masks, so the order is capped at
// 64 (far above anything this library is used for, but it keeps set algebra
// branch-free).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cascade {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctzll(s); }

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidEdgeError : GraphError {
  using GraphError::GraphError;
};
struct ForbiddenTerminalContraction : GraphError {
  using GraphError::GraphError;
};
struct MissingTerminalsError : GraphError {
  using GraphError::GraphError;
};
struct SizeCapError : GraphError {
  using GraphError::GraphError;
};

// Undirected edge, stored with u < v.
struct Edge {
  int u = -1, v = -1;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct MinorOp {
  enum Kind { Delete, Contract };
  Edge edge;
  Kind kind = Delete;
  bool operator==(const MinorOp&) const = default;
  auto operator<=>(const MinorOp&) const = default;
};

std::string to_string(const MinorOp& op);

// Simple graph with an optional ordered terminal pair (x, y).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices) throw SizeCapError("vertex count out of range");
  }

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidEdgeError("loops are not allowed");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return popcount(neighbors(v)); }
  VertexSet all_vertices() const {
    return n_ == kMaxVertices ? ~VertexSet{0} : (vbit(n_) - 1);
  }

  std::vector<Edge> edges() const;
  std::vector<int> neighbor_list(int v) const;

  // Terminals. Either both are set or neither.
  bool has_terminals() const { return x_ >= 0; }
  int terminal_x() const { return x_; }
  int terminal_y() const { return y_; }
  bool is_terminal(int v) const { return v == x_ || (x_ >= 0 && v == y_); }
  void set_terminals(int x, int y) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw GraphError("terminals must be distinct");
    x_ = x;
    y_ = y;
  }
  void clear_terminals() { x_ = y_ = -1; }

  // True for members of the edgeless-terminal-pair subclass: terminals
  // present and the edge xy absent.
  bool terminals_nonadjacent() const {
    return has_terminals() && !has_edge(x_, y_);
  }

  bool is_connected() const;
  VertexSet component_of(int v) const;

  // Underlying graph with the terminal labels dropped.
  LabeledGraph underlying() const {
    LabeledGraph g = *this;
    g.clear_terminals();
    return g;
  }

  // Keeps only the vertices in `keep`, relabeling to 0..k-1 in increasing
  // old-index order. Terminals outside `keep` are dropped (both, if either).
  LabeledGraph induced_subgraph(VertexSet keep) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex index out of range");
  }
  int n_ = 0;
  std::vector<VertexSet> adj_;
  int x_ = -1, y_ = -1;
};

// --- minor operations ------------------------------------------------------

// All available minor-operations: every edge deletion plus every edge
// contraction except contraction of the terminal pair.
std::vector<MinorOp> minor_ops(const LabeledGraph& g);

// Applies one minor operation. Contraction merges the edge's endpoints into
// the smaller index, merges parallel edges, drops loops, and makes the merged
// vertex a terminal when either endpoint was one. The vertex numbering is
// compacted (indices above the removed endpoint shift down by one).
LabeledGraph apply_minor_op(const LabeledGraph& g, const MinorOp& op);

LabeledGraph delete_edge(const LabeledGraph& g, Edge e);
LabeledGraph contract_edge(const LabeledGraph& g, Edge e);

// G+ : adds the edge xy if absent. Idempotent.
LabeledGraph augment(const LabeledGraph& g);

// G/xy : identifies the terminals (they need not be adjacent) and merges any
// parallel edges. The result carries no terminals.
LabeledGraph identify_terminals(const LabeledGraph& g);

// --- blocks ----------------------------------------------------------------

struct BlockDecomposition {
  // Vertex set per block: maximal 2-connected subgraphs and bridge edges.
  // Isolated vertices form their own single-vertex blocks.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
};

BlockDecomposition blocks(const LabeledGraph& g);

// --- common constructions (used widely in tests and generators) ------------

LabeledGraph complete_graph(int n);
LabeledGraph complete_bipartite(int a, int b);
LabeledGraph cycle_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph from_edges(int n, const std::vector<Edge>& es);

// Disjoint union; terminals are taken from `a` if present, else from `b`
// (shifted).
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace cascade
