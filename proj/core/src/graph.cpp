#include "cascade/graph.hpp"

#include <algorithm>

namespace cascade {

std::string to_string(const MinorOp& op) {
  std::string s = op.kind == MinorOp::Delete ? "-" : "/";
  return "(" + std::to_string(op.edge.u) + "," + std::to_string(op.edge.v) +
         ")" + s;
}

int LabeledGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += popcount(adj_[v]);
  return total / 2;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> es;
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = lowest_vertex(higher);
      higher &= higher - 1;
      es.emplace_back(u, v);
    }
  }
  return es;
}

std::vector<int> LabeledGraph::neighbor_list(int v) const {
  std::vector<int> out;
  VertexSet s = neighbors(v);
  while (s) {
    out.push_back(lowest_vertex(s));
    s &= s - 1;
  }
  return out;
}

VertexSet LabeledGraph::component_of(int v) const {
  check_vertex(v);
  VertexSet comp = vbit(v), frontier = vbit(v);
  while (frontier) {
    int u = lowest_vertex(frontier);
    frontier &= frontier - 1;
    VertexSet fresh = adj_[u] & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

bool LabeledGraph::is_connected() const {
  if (n_ <= 1) return true;
  return component_of(0) == all_vertices();
}

LabeledGraph LabeledGraph::induced_subgraph(VertexSet keep) const {
  keep &= all_vertices();
  std::vector<int> map(n_, -1);
  int k = 0;
  for (int v = 0; v < n_; ++v)
    if (keep & vbit(v)) map[v] = k++;
  LabeledGraph out(k);
  for (int v = 0; v < n_; ++v) {
    if (map[v] < 0) continue;
    VertexSet nb = adj_[v] & keep;
    while (nb) {
      int u = lowest_vertex(nb);
      nb &= nb - 1;
      if (u > v) out.add_edge(map[v], map[u]);
    }
  }
  if (has_terminals() && (keep & vbit(x_)) && (keep & vbit(y_)))
    out.set_terminals(map[x_], map[y_]);
  return out;
}

std::vector<MinorOp> minor_ops(const LabeledGraph& g) {
  std::vector<MinorOp> ops;
  Edge xy;
  bool forbid = false;
  if (g.has_terminals()) {
    xy = Edge(g.terminal_x(), g.terminal_y());
    forbid = g.has_edge(xy);
  }
  for (const Edge& e : g.edges()) ops.push_back({e, MinorOp::Delete});
  for (const Edge& e : g.edges())
    if (!(forbid && e == xy)) ops.push_back({e, MinorOp::Contract});
  return ops;
}

LabeledGraph delete_edge(const LabeledGraph& g, Edge e) {
  if (!g.has_edge(e)) throw InvalidEdgeError("delete: edge not in graph");
  LabeledGraph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

LabeledGraph contract_edge(const LabeledGraph& g, Edge e) {
  if (!g.has_edge(e)) throw InvalidEdgeError("contract: edge not in graph");
  if (g.has_terminals() && g.is_terminal(e.u) && g.is_terminal(e.v))
    throw ForbiddenTerminalContraction("contraction of the terminal pair");
  // Merge v into u (u < v by Edge normalization), then drop v.
  int u = e.u, v = e.v;
  int n = g.vertex_count();
  LabeledGraph out(n - 1);
  auto map = [&](int w) { return w < v ? w : w - 1; };
  for (const Edge& f : g.edges()) {
    if (f.u == v || f.v == v) continue;
    out.add_edge(map(f.u), map(f.v));
  }
  VertexSet nb = g.neighbors(v) & ~vbit(u);
  while (nb) {
    int w = lowest_vertex(nb);
    nb &= nb - 1;
    out.add_edge(map(w), map(u));
  }
  if (g.has_terminals()) {
    int x = g.terminal_x(), y = g.terminal_y();
    // A contraction incident with a terminal leaves the merged vertex a
    // terminal; the merged vertex is u (or u inherits v's terminal role).
    auto relocate = [&](int t) { return t == v ? map(u) : map(t); };
    out.set_terminals(relocate(x), relocate(y));
  }
  return out;
}

LabeledGraph apply_minor_op(const LabeledGraph& g, const MinorOp& op) {
  return op.kind == MinorOp::Delete ? delete_edge(g, op.edge)
                                    : contract_edge(g, op.edge);
}

LabeledGraph augment(const LabeledGraph& g) {
  if (!g.has_terminals()) throw MissingTerminalsError("augment: no terminals");
  LabeledGraph out = g;
  out.add_edge(g.terminal_x(), g.terminal_y());
  return out;
}

LabeledGraph identify_terminals(const LabeledGraph& g) {
  if (!g.has_terminals())
    throw MissingTerminalsError("identify_terminals: no terminals");
  int x = g.terminal_x(), y = g.terminal_y();
  int u = std::min(x, y), v = std::max(x, y);
  int n = g.vertex_count();
  LabeledGraph out(n - 1);
  auto map = [&](int w) { return w < v ? w : w - 1; };
  for (const Edge& f : g.edges()) {
    if (f.u == v || f.v == v) continue;
    out.add_edge(map(f.u), map(f.v));
  }
  VertexSet nb = g.neighbors(v) & ~vbit(u);
  while (nb) {
    int w = lowest_vertex(nb);
    nb &= nb - 1;
    out.add_edge(map(w), map(u));
  }
  return out;
}

namespace {

// Iterative Tarjan lowpoint walk collecting biconnected components.
struct BlockFinder {
  const LabeledGraph& g;
  std::vector<int> disc, low, parent;
  std::vector<std::pair<int, int>> stack;
  BlockDecomposition out;
  std::vector<bool> is_cut;
  int timer = 0;

  explicit BlockFinder(const LabeledGraph& graph)
      : g(graph),
        disc(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        parent(graph.vertex_count(), -1),
        is_cut(graph.vertex_count(), false) {}

  void pop_block(int u, int v) {
    std::vector<int> verts;
    VertexSet seen = 0;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      for (int w : {a, b})
        if (!(seen & vbit(w))) {
          seen |= vbit(w);
          verts.push_back(w);
        }
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    out.blocks.push_back(std::move(verts));
  }

  void dfs(int root) {
    std::vector<std::pair<int, int>> call;  // (vertex, next neighbor index)
    std::vector<std::vector<int>> nbrs(g.vertex_count());
    call.emplace_back(root, 0);
    nbrs[root] = g.neighbor_list(root);
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!call.empty()) {
      auto& [v, idx] = call.back();
      if (idx < static_cast<int>(nbrs[v].size())) {
        int w = nbrs[v][idx++];
        if (disc[w] < 0) {
          stack.emplace_back(v, w);
          parent[w] = v;
          disc[w] = low[w] = timer++;
          nbrs[w] = g.neighbor_list(w);
          if (v == root) ++root_children;
          call.emplace_back(w, 0);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) {
          int p = call.back().first;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            if (p != root) is_cut[p] = true;
            pop_block(p, v);
          }
        }
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }

  BlockDecomposition run() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (disc[v] >= 0) continue;
      if (g.degree(v) == 0) {
        disc[v] = timer++;
        out.blocks.push_back({v});
        continue;
      }
      dfs(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return std::move(out);
  }
};

}  // namespace

BlockDecomposition blocks(const LabeledGraph& g) { return BlockFinder(g).run(); }

LabeledGraph complete_graph(int n) {
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

LabeledGraph complete_bipartite(int a, int b) {
  LabeledGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

LabeledGraph cycle_graph(int n) {
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

LabeledGraph path_graph(int n) {
  LabeledGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabeledGraph from_edges(int n, const std::vector<Edge>& es) {
  LabeledGraph g(n);
  for (const Edge& e : es) g.add_edge(e.u, e.v);
  return g;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  int off = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  if (a.has_terminals())
    g.set_terminals(a.terminal_x(), a.terminal_y());
  else if (b.has_terminals())
    g.set_terminals(b.terminal_x() + off, b.terminal_y() + off);
  return g;
}

}  // namespace cascade
