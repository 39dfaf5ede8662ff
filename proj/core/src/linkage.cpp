#include "cascade/linkage.hpp"

#include <algorithm>
#include <functional>

namespace cascade {

namespace {

// Unit-capacity max flow on a tiny layered graph, vertices pre-split by the
// caller. Nodes indexed 0..n-1, source s, sink t, capacities 0/1 (or more
// on source/sink arcs).
struct MaxFlow {
  int n;
  std::vector<std::vector<int>> cap;

  explicit MaxFlow(int nodes) : n(nodes), cap(nodes, std::vector<int>(nodes, 0)) {}

  int run(int s, int t) {
    int total = 0;
    for (;;) {
      std::vector<int> parent(n, -1);
      parent[s] = s;
      std::vector<int> queue{s};
      for (size_t qi = 0; qi < queue.size() && parent[t] < 0; ++qi) {
        int v = queue[qi];
        for (int w = 0; w < n; ++w)
          if (cap[v][w] > 0 && parent[w] < 0) {
            parent[w] = v;
            queue.push_back(w);
          }
      }
      if (parent[t] < 0) return total;
      for (int v = t; v != s; v = parent[v]) {
        cap[parent[v]][v] -= 1;
        cap[v][parent[v]] += 1;
      }
      ++total;
    }
  }

  // After run(): nodes reachable from s in the residual graph.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w = 0; w < n; ++w)
        if (cap[v][w] > 0 && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    return seen;
  }
};

// Disjoint-path count from `sources` to `sinks` where intermediate vertices
// are confined to `interior_ok` and used at most once; sources/sinks are
// endpoints only. Optionally reports the interior min cut.
int disjoint_paths(const LabeledGraph& g, VertexSet sources, VertexSet sinks,
                   VertexSet interior_ok, std::vector<int>* min_cut) {
  int n = g.vertex_count();
  // Node layout: 0..n-1 = in-copies, n..2n-1 = out-copies, 2n = S, 2n+1 = T.
  MaxFlow mf(2 * n + 2);
  int S = 2 * n, T = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    bool src = (sources >> v) & 1, snk = (sinks >> v) & 1,
         mid = (interior_ok >> v) & 1;
    if (src) {
      mf.cap[S][v] = 1;
      mf.cap[v][n + v] = 1;
    } else if (snk) {
      mf.cap[v][n + v] = 1;
      mf.cap[n + v][T] = 1;
    } else if (mid) {
      mf.cap[v][n + v] = 1;
    }
  }
  for (const Edge& e : g.edges()) {
    auto eligible = [&](int v) {
      return ((sources | sinks | interior_ok) >> v) & 1;
    };
    if (!eligible(e.u) || !eligible(e.v)) continue;
    auto src = [&](int v) { return (sources >> v) & 1; };
    auto snk = [&](int v) { return (sinks >> v) & 1; };
    // Arcs run out(u) -> in(v); forbid entering sources and leaving sinks.
    if (!snk(e.u) && !src(e.v)) mf.cap[n + e.u][e.v] = 1;
    if (!snk(e.v) && !src(e.u)) mf.cap[n + e.v][e.u] = 1;
  }
  int flow = mf.run(S, T);
  if (min_cut) {
    min_cut->clear();
    std::vector<char> reach = mf.reachable(S);
    for (int v = 0; v < n; ++v)
      if (reach[v] && !reach[n + v]) min_cut->push_back(v);
  }
  return flow;
}

VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

// The |U| disjoint connecting paths plus boundary access; shared by the
// main check and the removability probes.
bool u_linked_with_access(const LabeledGraph& g, const KGraphWitness& core,
                          const std::vector<int>& u_set) {
  VertexSet boundary = to_set(core.boundary);
  VertexSet uset = to_set(u_set);
  VertexSet lset = core.vertices;

  // Zero-length paths: U vertices on the boundary serve themselves.
  VertexSet trivial = uset & boundary;
  VertexSet need = uset & ~trivial;
  VertexSet sources = boundary & ~trivial;
  VertexSet interior_ok = g.all_vertices() & ~lset & ~uset & ~trivial;
  int want = popcount(need);
  if (want > 0) {
    if (disjoint_paths(g, sources, need, interior_ok, nullptr) < want)
      return false;
  }

  // Access paths: internally off the core, ending anywhere in U.
  auto reaches_u = [&](VertexSet starts) {
    if (starts & uset) return true;
    VertexSet frontier = 0;
    VertexSet it = starts;
    while (it) {
      int v = lowest_vertex(it);
      it &= it - 1;
      frontier |= g.neighbors(v);
    }
    if (frontier & uset) return true;
    VertexSet seen = frontier & ~lset;
    frontier = seen;
    while (frontier) {
      int v = lowest_vertex(frontier);
      frontier &= frontier - 1;
      if (g.neighbors(v) & uset) return true;
      VertexSet next = g.neighbors(v) & ~lset & ~seen;
      seen |= next;
      frontier |= next;
    }
    return false;
  };

  if (core.kind == KGraphWitness::K4) {
    for (int bv : core.branch_vertices) {
      if (bv == core.terminal) continue;
      if (!reaches_u(vbit(bv))) return false;
    }
  } else {
    // Open boundary branches; empty interiors are vacuous.
    for (const auto& br : core.branches) {
      VertexSet in = 0;
      for (size_t i = 1; i + 1 < br.size(); ++i) in |= vbit(br[i]);
      if (in & core.interior) continue;  // the terminal branch
      if (!in) continue;
      if (!reaches_u(in)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<LinkageWitness> check_linkage(const LabeledGraph& g,
                                            const KGraphWitness& core,
                                            const std::vector<int>& u_set) {
  if (core.boundary.empty())
    throw GraphError("check_linkage: core lacks a boundary cycle");
  if (!u_linked_with_access(g, core, u_set)) return std::nullopt;

  LinkageWitness w;
  w.core = core;
  w.linked_to = u_set;
  for (int u : u_set) {
    Foot f;
    f.u = u;
    f.path = {u};
    if (g.degree(u) < 2) {
      // Degree-one u: follow the pendant path to the first branching vertex.
      int prev = -1, cur = u;
      while (g.degree(cur) < 3) {
        VertexSet nb = g.neighbors(cur);
        if (prev >= 0) nb &= ~vbit(prev);
        if (!nb) break;
        prev = cur;
        cur = lowest_vertex(nb);
        f.path.push_back(cur);
      }
    }
    std::vector<int> rest;
    for (int v : u_set)
      if (v != u) rest.push_back(v);
    f.removable = u_linked_with_access(g, core, rest);
    w.feet.push_back(std::move(f));
  }
  return w;
}

SeparationResult separation_number(const LabeledGraph& g,
                                   const KGraphWitness& lx,
                                   const KGraphWitness& ly) {
  if (lx.vertices & ly.vertices)
    throw WitnessesNotDisjointError("separation_number: cores intersect");
  SeparationResult out;
  VertexSet bx = to_set(lx.boundary), by = to_set(ly.boundary);
  VertexSet cores = lx.vertices | ly.vertices;
  VertexSet mid = g.all_vertices() & ~cores;
  out.k = disjoint_paths(g, bx, by, mid, &out.blocking_set);

  // Paths between the full cores decide whether a terminal joins the cut.
  int r = disjoint_paths(g, lx.vertices, ly.vertices, mid, nullptr);
  if (r == out.k || lx.terminal < 0 || ly.terminal < 0) {
    out.blocking_case = 0;
  } else {
    // One extra path must end in a core interior; the side attached at its
    // interior contributes its terminal.
    bool into_x = false;
    VertexSet it = lx.interior;
    while (it && !into_x) {
      int v = lowest_vertex(it);
      it &= it - 1;
      if (g.neighbors(v) & ~cores) into_x = true;
    }
    out.blocking_case = into_x ? 1 : 2;
  }
  return out;
}

}  // namespace cascade
