#include "cascade/kgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cascade/planarity.hpp"

namespace cascade {

namespace {

struct Enumerator {
  const LabeledGraph& g;        // graph carrying the candidate subgraphs
  const LabeledGraph& ambient;  // graph supplying principal bridges
  VertexSet allowed;
  int z;                        // -1 for plain K-graphs
  size_t cap;
  std::function<bool(const KGraphWitness&)> sink;  // false stops
  size_t emitted = 0;
  bool stopped = false;
  std::set<std::pair<VertexSet, std::vector<Edge>>> seen;

  Enumerator(const LabeledGraph& gg, const LabeledGraph& amb, VertexSet allow,
             int zz, size_t c)
      : g(gg), ambient(amb), allowed(allow), z(zz), cap(c) {}

  // Paths a..b with interior inside `free`, length within [lo, hi].
  void paths(int a, int b, VertexSet free, int lo, int hi,
             const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> path{a};
    VertexSet used = vbit(a);
    std::function<void(int)> dfs = [&](int v) {
      if (stopped) return;
      int len = static_cast<int>(path.size());  // edges so far = len-1
      if (g.has_edge(v, b) && len >= lo) {
        path.push_back(b);
        fn(path);
        path.pop_back();
      }
      if (len >= hi) return;
      VertexSet options = g.neighbors(v) & free & ~used & ~vbit(b);
      while (options && !stopped) {
        int w = lowest_vertex(options);
        options &= options - 1;
        path.push_back(w);
        used |= vbit(w);
        dfs(w);
        used &= ~vbit(w);
        path.pop_back();
      }
    };
    dfs(a);
  }

  static VertexSet path_interior(const std::vector<int>& p) {
    VertexSet s = 0;
    for (size_t i = 1; i + 1 < p.size(); ++i) s |= vbit(p[i]);
    return s;
  }

  void finish(KGraphWitness w) {
    w.vertices = 0;
    w.edges.clear();
    for (const auto& br : w.branches) {
      for (int v : br) w.vertices |= vbit(v);
      for (size_t i = 0; i + 1 < br.size(); ++i)
        w.edges.emplace_back(br[i], br[i + 1]);
    }
    std::sort(w.edges.begin(), w.edges.end());
    w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
    if (!seen.emplace(w.vertices, w.edges).second) return;

    // Principal bridge in the ambient graph.
    BridgeDecomposition bd = bridges(ambient, w.subgraph());
    const HBridge* principal = nullptr;
    for (const HBridge& b : bd.bridges) {
      bool ok = true;
      if (w.kind == KGraphWitness::K4) {
        for (int bv : w.branch_vertices)
          if (std::find(b.attachments.begin(), b.attachments.end(), bv) ==
              b.attachments.end())
            ok = false;
      } else {
        for (const auto& br : w.branches) {
          bool hit = false;
          for (size_t i = 1; i + 1 < br.size(); ++i)
            if (std::find(b.attachments.begin(), b.attachments.end(), br[i]) !=
                b.attachments.end())
              hit = true;
          if (!hit) ok = false;
        }
      }
      if (ok) {
        principal = &b;
        break;
      }
    }
    if (!principal) return;
    w.principal_attachments = principal->attachments;

    // Boundary and interior for terminal-positioned cores.
    if (z >= 0) {
      w.terminal = z;
      w.boundary.clear();
      w.interior = 0;
      if (w.kind == KGraphWitness::K4) {
        // Boundary: the three branches avoiding z, walked as a cycle.
        std::vector<std::vector<int>> cyc;
        for (const auto& br : w.branches)
          if (br.front() != z && br.back() != z) cyc.push_back(br);
        w.boundary = cyc[0];
        for (int step = 0; step < 2; ++step) {
          for (auto& br : cyc) {
            if (br.front() == w.boundary.back() &&
                br.back() != w.boundary[w.boundary.size() - 2]) {
              w.boundary.insert(w.boundary.end(), br.begin() + 1, br.end());
            } else if (br.back() == w.boundary.back() &&
                       br.front() != w.boundary[w.boundary.size() - 2]) {
              w.boundary.insert(w.boundary.end(), br.rbegin() + 1, br.rend());
            }
          }
        }
        w.boundary.pop_back();  // closing vertex repeated
        w.interior = w.vertices;
        for (int v : w.boundary) w.interior &= ~vbit(v);
        w.interior |= vbit(z);
        for (const auto& br : w.branches)
          if (br.front() == z || br.back() == z)
            w.interior |= path_interior(br);
      } else {
        std::vector<const std::vector<int>*> side;
        for (const auto& br : w.branches) {
          VertexSet in = path_interior(br);
          if (!(in & vbit(z))) side.push_back(&br);
        }
        w.boundary = *side[0];
        for (auto it = side[1]->rbegin() + 1; it != side[1]->rend() - 1; ++it)
          w.boundary.push_back(*it);
        for (const auto& br : w.branches) {
          VertexSet in = path_interior(br);
          if (in & vbit(z)) w.interior = in;
        }
      }
    }
    ++emitted;
    if (!sink(w) || emitted >= cap) stopped = true;
  }

  void run_k4() {
    int n = g.vertex_count();
    std::vector<int> bv;
    std::function<void(int)> choose = [&](int from) {
      if (stopped) return;
      if (bv.size() == 4) {
        if (z >= 0 && std::find(bv.begin(), bv.end(), z) == bv.end()) return;
        assign_k4_branches(bv);
        return;
      }
      for (int v = from; v < n; ++v) {
        if (!(allowed & vbit(v))) continue;
        if (g.degree(v) < 3) continue;
        bv.push_back(v);
        choose(v + 1);
        bv.pop_back();
        if (stopped) return;
      }
    };
    choose(0);
  }

  void assign_k4_branches(const std::vector<int>& bv) {
    VertexSet bvset = 0;
    for (int v : bv) bvset |= vbit(v);
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                    {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> branch(6);
    VertexSet used_interiors = 0;
    std::function<void(int)> next = [&](int i) {
      if (stopped) return;
      if (i == 6) {
        KGraphWitness w;
        w.kind = KGraphWitness::K4;
        w.branch_vertices = bv;
        w.branches = branch;
        finish(std::move(w));
        return;
      }
      int a = bv[pairs[i][0]], b = bv[pairs[i][1]];
      VertexSet free = allowed & ~bvset & ~used_interiors;
      paths(a, b, free, 1, g.vertex_count(), [&](const std::vector<int>& p) {
        branch[i] = p;
        VertexSet in = path_interior(p);
        used_interiors |= in;
        next(i + 1);
        used_interiors &= ~in;
      });
    };
    next(0);
  }

  void run_k23() {
    int n = g.vertex_count();
    for (int p = 0; p < n && !stopped; ++p) {
      if (!(allowed & vbit(p)) || g.degree(p) < 3) continue;
      if (z >= 0 && p == z) continue;
      for (int q = p + 1; q < n && !stopped; ++q) {
        if (!(allowed & vbit(q)) || g.degree(q) < 3) continue;
        if (z >= 0 && q == z) continue;
        assign_k23_branches(p, q);
      }
    }
  }

  void assign_k23_branches(int p, int q) {
    VertexSet ends = vbit(p) | vbit(q);
    std::vector<std::vector<int>> branch(3);
    VertexSet used_interiors = 0;
    std::function<void(int)> next = [&](int i) {
      if (stopped) return;
      if (i == 3) {
        if (z >= 0) {
          int with_z = 0;
          for (const auto& br : branch)
            if (path_interior(br) & vbit(z)) ++with_z;
          if (with_z != 1) return;
        }
        // Branches are unordered: keep the lexicographically sorted listing.
        std::vector<std::vector<int>> sorted = branch;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != branch) return;
        KGraphWitness w;
        w.kind = KGraphWitness::K23;
        w.branch_vertices = {p, q};
        w.branches = branch;
        finish(std::move(w));
        return;
      }
      VertexSet free = allowed & ~ends & ~used_interiors;
      // Length >= 2: a simple-graph K2,3 subdivision has no p-q edge branch.
      paths(p, q, free, 2, g.vertex_count(), [&](const std::vector<int>& pth) {
        branch[i] = pth;
        VertexSet in = path_interior(pth);
        used_interiors |= in;
        next(i + 1);
        used_interiors &= ~in;
      });
    };
    next(0);
  }

  void run() {
    run_k4();
    if (!stopped) run_k23();
  }
};

std::vector<KGraphWitness> enumerate(const LabeledGraph& g,
                                     const LabeledGraph& ambient,
                                     VertexSet allowed, int z, size_t cap,
                                     size_t want) {
  std::vector<KGraphWitness> out;
  Enumerator e(g, ambient, allowed, z, cap);
  e.sink = [&](const KGraphWitness& w) {
    out.push_back(w);
    return out.size() < want;
  };
  e.run();
  return out;
}

// Shrinks a witness: replaces it while some properly contained witness of
// the same terminal survives certification.
KGraphWitness minimize_witness(const LabeledGraph& g, const LabeledGraph& aug,
                               KGraphWitness w, int z) {
  for (;;) {
    LabeledGraph restricted(g.vertex_count());
    for (const Edge& e : w.edges) restricted.add_edge(e.u, e.v);
    if (g.has_terminals())
      restricted.set_terminals(g.terminal_x(), g.terminal_y());
    bool improved = false;
    Enumerator e(restricted, aug, w.vertices, z, 10000);
    e.sink = [&](const KGraphWitness& cand) {
      if (cand.vertices == w.vertices && cand.edges == w.edges) return true;
      if ((cand.vertices & ~w.vertices) == 0 &&
          std::includes(w.edges.begin(), w.edges.end(), cand.edges.begin(),
                        cand.edges.end())) {
        w = cand;
        improved = true;
        return false;
      }
      return true;
    };
    e.run();
    if (!improved) return w;
  }
}

}  // namespace

std::vector<KGraphWitness> find_k_graphs(const LabeledGraph& g, int z,
                                         size_t cap) {
  if (!g.has_terminals())
    throw MissingTerminalsError("find_k_graphs: no terminals");
  if (z != g.terminal_x() && z != g.terminal_y())
    throw GraphError("find_k_graphs: z is not a terminal");
  LabeledGraph aug = augment(g);
  return enumerate(g, aug, g.all_vertices(), z, cap, cap);
}

std::vector<KGraphWitness> find_plain_k_graphs(const LabeledGraph& g,
                                               VertexSet allowed, size_t cap) {
  return enumerate(g, g, allowed, -1, cap, cap);
}

std::optional<std::pair<KGraphWitness, KGraphWitness>> disjoint_xy_k_graphs(
    const LabeledGraph& g, size_t cap) {
  if (!g.has_terminals())
    throw MissingTerminalsError("disjoint_xy_k_graphs: no terminals");
  LabeledGraph aug = augment(g);
  int x = g.terminal_x(), y = g.terminal_y();
  std::optional<std::pair<KGraphWitness, KGraphWitness>> found;
  Enumerator ex(g, aug, g.all_vertices(), x, cap);
  ex.sink = [&](const KGraphWitness& lx) {
    Enumerator ey(g, aug, g.all_vertices() & ~lx.vertices, y, cap);
    ey.sink = [&](const KGraphWitness& ly) {
      found = {lx, ly};
      return false;
    };
    ey.run();
    return !found.has_value();
  };
  ex.run();
  if (!found) return std::nullopt;
  found->first = minimize_witness(g, aug, found->first, x);
  found->second = minimize_witness(g, aug, found->second, y);
  return found;
}

bool has_two_disjoint_genus_witnesses(const LabeledGraph& g) {
  auto disjoint_cert = [&](VertexSet used) {
    LabeledGraph rest = g.induced_subgraph(g.all_vertices() & ~used);
    if (!is_planar(rest)) return true;  // a Kuratowski subgraph survives
    return !find_plain_k_graphs(g, g.all_vertices() & ~used, 2000).empty();
  };
  if (auto k = find_kuratowski(g)) {
    VertexSet core = 0;
    for (int v = 0; v < k->vertex_count(); ++v)
      if (k->degree(v) > 0) core |= vbit(v);
    if (disjoint_cert(core)) return true;
  }
  for (const KGraphWitness& w : find_plain_k_graphs(g, g.all_vertices(), 200))
    if (disjoint_cert(w.vertices)) return true;
  return false;
}

}  // namespace cascade
