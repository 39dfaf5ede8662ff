// Shared graph builders and seeded random generators for the test suites.
#pragma once

#include <random>
#include <vector>

#include "cascade/graph.hpp"
#include "cascade/planarity.hpp"

namespace cascade::testutil {

inline LabeledGraph petersen() {
  LabeledGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);       // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);             // spokes
  }
  return g;
}

inline LabeledGraph cube() {
  LabeledGraph g(8);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(4 + i, 4 + (i + 1) % 4);
    g.add_edge(i, 4 + i);
  }
  return g;
}

// Wheel: hub 0 joined to a rim cycle 1..k.
inline LabeledGraph wheel(int k) {
  LabeledGraph g(k + 1);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % k + 1);
  }
  return g;
}

// Two triangles joined by a perfect matching, with an apex over each
// triangle; terminals at the apexes. Vertices: 0 = x, 1..3 = a_i,
// 4..6 = b_i, 7 = y.
inline LabeledGraph cylinder_gadget() {
  LabeledGraph g(8);
  for (int i = 1; i <= 3; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(4, 6);
  for (int i = 1; i <= 3; ++i) g.add_edge(i, i + 3);
  for (int i = 4; i <= 6; ++i) g.add_edge(7, i);
  g.set_terminals(0, 7);
  return g;
}

// K4 on {x,a,b,c} plus u adjacent to a,b,c plus K5 on {u,p,q,r,y};
// terminals x,y. Vertices: 0=x, 1=a, 2=b, 3=c, 4=u, 5=p, 6=q, 7=r, 8=y.
inline LabeledGraph one_separated_k5_gadget() {
  LabeledGraph g(9);
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) g.add_edge(i, j);
  for (int i = 1; i <= 3; ++i) g.add_edge(4, i);
  for (int i = 4; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) g.add_edge(i, j);
  g.set_terminals(0, 8);
  return g;
}

inline LabeledGraph random_graph(std::mt19937& rng, int n, double p) {
  LabeledGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline LabeledGraph random_connected_graph(std::mt19937& rng, int n, double p) {
  LabeledGraph g = random_graph(rng, n, p);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (!g.is_connected()) {
    int u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

// Random connected planar graph: a random spanning tree plus random extra
// edges accepted only while planarity survives.
inline LabeledGraph random_connected_planar(std::mt19937& rng, int n,
                                            int extra_edges) {
  LabeledGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> earlier(0, v - 1);
    g.add_edge(v, earlier(rng));
  }
  int added = 0, tries = 0;
  while (added < extra_edges && tries < 40 * extra_edges + 40) {
    ++tries;
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    LabeledGraph h = g;
    h.add_edge(u, v);
    if (is_planar(h)) {
      g = h;
      ++added;
    }
  }
  return g;
}

inline LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm) {
  LabeledGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  if (g.has_terminals())
    out.set_terminals(perm[g.terminal_x()], perm[g.terminal_y()]);
  return out;
}

inline LabeledGraph random_relabel(std::mt19937& rng, const LabeledGraph& g) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace cascade::testutil
