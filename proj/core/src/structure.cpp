#include "cascade/structure.hpp"

#include <algorithm>
#include <functional>

#include "cascade/planarity.hpp"

namespace cascade {

bool Subgraph::contains_edge(Edge e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Subgraph Subgraph::of_cycle(const std::vector<int>& cycle) {
  Subgraph s;
  int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    s.vertices |= vbit(cycle[i]);
    s.edges.emplace_back(cycle[i], cycle[(i + 1) % k]);
  }
  return s;
}

Subgraph Subgraph::of_graph(const LabeledGraph& g) {
  Subgraph s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) s.vertices |= vbit(v);
  s.edges = g.edges();
  return s;
}

static void validate_subgraph(const LabeledGraph& g, const Subgraph& host) {
  for (const Edge& e : host.edges) {
    if (!g.has_edge(e)) throw NotASubgraphError("host edge not in graph");
    if (!host.contains_vertex(e.u) || !host.contains_vertex(e.v))
      throw NotASubgraphError("host edge endpoint outside host vertices");
  }
}

BridgeDecomposition bridges(const LabeledGraph& g, const Subgraph& host) {
  validate_subgraph(g, host);
  BridgeDecomposition out;
  // Chords: edges of g off the host with both ends on it.
  for (const Edge& e : g.edges()) {
    if (host.contains_edge(e)) continue;
    if (host.contains_vertex(e.u) && host.contains_vertex(e.v)) {
      HBridge b;
      b.vertices = vbit(e.u) | vbit(e.v);
      b.interior = 0;
      b.edges = {e};
      b.attachments = {e.u, e.v};
      b.trivial = true;
      out.bridges.push_back(std::move(b));
    }
  }
  // Components of g - V(host) with all incident edges.
  VertexSet off = g.all_vertices() & ~host.vertices;
  VertexSet seen = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(off & vbit(v)) || (seen & vbit(v))) continue;
    VertexSet comp = vbit(v), frontier = vbit(v);
    while (frontier) {
      int u = lowest_vertex(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = g.neighbors(u) & off & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    HBridge b;
    b.interior = comp;
    b.vertices = comp;
    VertexSet att = 0;
    VertexSet it = comp;
    while (it) {
      int u = lowest_vertex(it);
      it &= it - 1;
      att |= g.neighbors(u) & host.vertices;
      VertexSet nb = g.neighbors(u);
      while (nb) {
        int w = lowest_vertex(nb);
        nb &= nb - 1;
        if (w > u || !(comp & vbit(w))) b.edges.emplace_back(Edge(u, w));
      }
    }
    b.vertices |= att;
    while (att) {
      b.attachments.push_back(lowest_vertex(att));
      att &= att - 1;
    }
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    b.trivial = false;
    out.bridges.push_back(std::move(b));
  }
  std::sort(out.bridges.begin(), out.bridges.end(),
            [](const HBridge& a, const HBridge& b) {
              int la = lowest_vertex(a.vertices), lb = lowest_vertex(b.vertices);
              if (la != lb) return la < lb;
              if (a.vertices != b.vertices) return a.vertices < b.vertices;
              return a.edges < b.edges;
            });
  return out;
}

static void validate_cycle(const LabeledGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw NotACycleError("cycle too short");
  VertexSet seen = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (seen & vbit(u)) throw NotACycleError("repeated cycle vertex");
    seen |= vbit(u);
    if (!g.has_edge(u, v)) throw NotACycleError("missing cycle edge");
  }
}

OverlapGraph overlap_graph(const LabeledGraph& g, const std::vector<int>& cycle) {
  validate_cycle(g, cycle);
  OverlapGraph out;
  out.decomposition = bridges(g, Subgraph::of_cycle(cycle));
  int k = static_cast<int>(cycle.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) pos[cycle[i]] = i;

  auto positions = [&](const HBridge& b) {
    std::vector<int> ps;
    for (int a : b.attachments) ps.push_back(pos[a]);
    std::sort(ps.begin(), ps.end());
    return ps;
  };

  const auto& bs = out.decomposition.bridges;
  for (size_t i = 0; i < bs.size(); ++i) {
    std::vector<int> pi = positions(bs[i]);
    for (size_t j = i + 1; j < bs.size(); ++j) {
      std::vector<int> pj = positions(bs[j]);
      OverlapEdge e;
      e.a = static_cast<int>(i);
      e.b = static_cast<int>(j);
      {
        std::vector<int> common;
        std::set_intersection(pi.begin(), pi.end(), pj.begin(), pj.end(),
                              std::back_inserter(common));
        e.three_common = common.size() >= 3;
      }
      // Skew: some a1 < b1 < a2 < b2 in cyclic order, all four distinct.
      for (size_t s = 0; s < pi.size() && !e.skew; ++s) {
        for (size_t t = s + 1; t < pi.size() && !e.skew; ++t) {
          int a1 = pi[s], a2 = pi[t];
          bool inside = false, outside = false;
          for (int b : pj) {
            if (b == a1 || b == a2) continue;
            if (a1 < b && b < a2)
              inside = true;
            else
              outside = true;
          }
          if (inside && outside) e.skew = true;
        }
      }
      if (e.skew || e.three_common) out.edges.push_back(e);
    }
  }
  return out;
}

bool separates(const LabeledGraph& g, const std::vector<int>& cycle, int u,
               int v) {
  OverlapGraph og = overlap_graph(g, cycle);
  const auto& bs = og.decomposition.bridges;
  int bu = -1, bv = -1;
  for (size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].interior & vbit(u)) bu = static_cast<int>(i);
    if (bs[i].interior & vbit(v)) bv = static_cast<int>(i);
  }
  if (bu < 0 || bv < 0) return false;  // on the cycle: not separated
  if (bu == bv) return false;
  // Odd overlap-graph distance; unreachable pairs count as not separated.
  std::vector<std::vector<int>> adj(bs.size());
  for (const OverlapEdge& e : og.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<int> dist(bs.size(), -1);
  dist[bu] = 0;
  std::vector<int> queue{bu};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    for (int nxt : adj[cur])
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        queue.push_back(nxt);
      }
  }
  return dist[bv] > 0 && dist[bv] % 2 == 1;
}

namespace {

// All simple cycles avoiding `forbidden`, each listed once (smallest vertex
// first, orientation fixed by the second-vs-last vertex).
std::vector<std::vector<int>> all_cycles_avoiding(const LabeledGraph& g,
                                                  VertexSet forbidden) {
  std::vector<std::vector<int>> cycles;
  int n = g.vertex_count();
  std::vector<int> path;
  VertexSet on_path = 0;
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (int w : g.neighbor_list(v)) {
      if (forbidden & vbit(w)) continue;
      if (w == s && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (w <= s || (on_path & vbit(w))) continue;
      path.push_back(w);
      on_path |= vbit(w);
      dfs(s, w);
      on_path &= ~vbit(w);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    if (forbidden & vbit(s)) continue;
    path = {s};
    on_path = vbit(s);
    dfs(s, s);
  }
  return cycles;
}

}  // namespace

int max_disjoint_separating_cycles(const LabeledGraph& g, int x, int y) {
  if (!is_planar(g)) throw NonplanarInputError("separating cycles: nonplanar");
  std::vector<VertexSet> sets;
  for (auto& c : all_cycles_avoiding(g, vbit(x) | vbit(y))) {
    if (!separates(g, c, x, y)) continue;
    VertexSet s = 0;
    for (int v : c) s |= vbit(v);
    sets.push_back(s);
  }
  int best = 0;
  std::function<void(size_t, VertexSet, int)> pick = [&](size_t i,
                                                         VertexSet used,
                                                         int count) {
    best = std::max(best, count);
    int remaining = 0;
    for (size_t j = i; j < sets.size(); ++j)
      if (!(sets[j] & used)) ++remaining;
    if (count + remaining <= best) return;
    for (size_t j = i; j < sets.size(); ++j)
      if (!(sets[j] & used)) pick(j + 1, used | sets[j], count + 1);
  };
  pick(0, 0, 0);
  return best;
}

DiskResult disk_embeddable(const LabeledGraph& g, const std::vector<int>& cycle) {
  validate_cycle(g, cycle);
  int n = g.vertex_count();
  LabeledGraph apexed(n + 1);
  for (const Edge& e : g.edges()) apexed.add_edge(e.u, e.v);
  for (int v : cycle) apexed.add_edge(n, v);
  DiskResult out;
  if (is_planar(apexed)) {
    out.embeddable = true;
    return out;
  }
  out.embeddable = false;
  // Kuratowski subgraph in a block away from the cycle's block.
  BlockDecomposition bd = blocks(apexed);
  VertexSet cyc = 0;
  for (int v : cycle) cyc |= vbit(v);
  for (const auto& blk : bd.blocks) {
    VertexSet s = 0;
    for (int v : blk) s |= vbit(v);
    if ((s & cyc) == cyc) continue;
    if (!is_planar(apexed.induced_subgraph(s))) {
      out.obstruction = DiskObstruction::KuratowskiOtherBlock;
      return out;
    }
  }
  // Crossing paths: distinct skew-overlapping bridges give them outright,
  // else look for two disjoint interlaced paths inside one bridge.
  OverlapGraph og = overlap_graph(g, cycle);
  for (const OverlapEdge& e : og.edges)
    if (e.skew) {
      out.obstruction = DiskObstruction::CrossingPaths;
      return out;
    }
  std::vector<int> pos(n, -1);
  int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) pos[cycle[i]] = i;
  for (const HBridge& b : og.decomposition.bridges) {
    if (b.attachments.size() < 4) continue;
    const auto& at = b.attachments;
    size_t m = at.size();
    auto path_pair_exists = [&](int s1, int t1, int s2, int t2) {
      // A path s1..t1 through the bridge interior avoiding a set, then
      // reachability s2..t2 in what remains.
      bool found = false;
      VertexSet used = vbit(s1);
      std::function<void(int)> walk = [&](int v) {
        if (found) return;
        if (v == t1) {
          VertexSet frontier = vbit(s2), seen = vbit(s2);
          while (frontier && !found) {
            int w = lowest_vertex(frontier);
            frontier &= frontier - 1;
            if (w == t2) {
              found = true;
              return;
            }
            VertexSet next = g.neighbors(w) & ~used & ~seen &
                             (b.interior | vbit(t2));
            seen |= next;
            frontier |= next;
          }
          return;
        }
        VertexSet options = g.neighbors(v) & ~used & (b.interior | vbit(t1));
        while (options && !found) {
          int w = lowest_vertex(options);
          options &= options - 1;
          used |= vbit(w);
          walk(w);
          used &= ~vbit(w);
        }
      };
      walk(s1);
      return found;
    };
    for (size_t i1 = 0; i1 < m; ++i1)
      for (size_t i2 = 0; i2 < m; ++i2)
        for (size_t i3 = 0; i3 < m; ++i3)
          for (size_t i4 = 0; i4 < m; ++i4) {
            int p1 = pos[at[i1]], p2 = pos[at[i2]], p3 = pos[at[i3]],
                p4 = pos[at[i4]];
            if (!(p1 < p2 && p2 < p3 && p3 < p4)) continue;
            if (path_pair_exists(at[i1], at[i3], at[i2], at[i4])) {
              out.obstruction = DiskObstruction::CrossingPaths;
              return out;
            }
          }
  }
  out.obstruction = DiskObstruction::Tripod;
  return out;
}

}  // namespace cascade
