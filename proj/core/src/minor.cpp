#include "cascade/minor.hpp"

#include <algorithm>
#include <numeric>

#include "cascade/canonical.hpp"

namespace cascade {

namespace {

// Branch-set search. H-vertices are seeded one at a time (highest H-degree
// first, each adjacent to an earlier seed when possible); after each seed,
// every H-edge inside the seeded prefix is realized by growing the two branch
// sets through unused vertices before the next seed is placed.
struct MinorSearch {
  const LabeledGraph& h;
  const LabeledGraph& g;
  std::vector<int> order;              // H vertices in seeding order
  std::vector<std::vector<int>> back;  // earlier-order H-neighbors per step
  std::vector<VertexSet> bset;         // branch set per H vertex
  std::vector<VertexSet> allowed;      // growth mask per H vertex
  VertexSet used = 0;

  MinorSearch(const LabeledGraph& hh, const LabeledGraph& gg) : h(hh), g(gg) {
    int hn = h.vertex_count();
    bset.assign(hn, 0);
    order.reserve(hn);
    std::vector<char> placed(hn, 0);
    // Highest degree first, then prefer vertices adjacent to the chosen
    // prefix so edge constraints bite early. Ties by vertex index.
    for (int step = 0; step < hn; ++step) {
      int pick = -1;
      bool pick_adj = false;
      for (int v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        bool adj = false;
        for (int u : h.neighbor_list(v))
          if (placed[u]) adj = true;
        auto better = [&](bool a_adj, int a, bool b_adj, int b) {
          if (a_adj != b_adj) return a_adj;
          if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
          return a < b;
        };
        if (pick < 0 || better(adj, v, pick_adj, pick)) {
          pick = v;
          pick_adj = adj;
        }
      }
      placed[pick] = 1;
      order.push_back(pick);
    }
    back.assign(hn, {});
    std::vector<int> pos(hn, 0);
    for (int i = 0; i < hn; ++i) pos[order[i]] = i;
    for (int i = 0; i < hn; ++i)
      for (int u : h.neighbor_list(order[i]))
        if (pos[u] < i) back[i].push_back(pos[u]);

    // Growth masks: g's terminals may only enter the matched terminal sets.
    allowed.assign(hn, g.all_vertices());
    if (h.has_terminals()) {
      VertexSet gterm = vbit(g.terminal_x()) | vbit(g.terminal_y());
      for (int v = 0; v < hn; ++v)
        if (!h.is_terminal(v)) allowed[v] &= ~gterm;
    }
  }

  VertexSet reach(VertexSet from, VertexSet through) const {
    VertexSet seen = from, frontier = from;
    while (frontier) {
      int v = lowest_vertex(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = g.neighbors(v) & through & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen;
  }

  VertexSet gneigh(VertexSet s) const {
    VertexSet out = 0;
    VertexSet it = s;
    while (it) {
      int v = lowest_vertex(it);
      it &= it - 1;
      out |= g.neighbors(v);
    }
    return out & ~s;
  }

  bool touching(VertexSet a, VertexSet b) const { return gneigh(a) & b; }

  bool grow(int step, size_t edge_idx) {
    int hi = order[step];
    // First unsatisfied edge constraint in the seeded prefix.
    while (edge_idx < back[step].size()) {
      int hj = order[back[step][edge_idx]];
      if (!touching(bset[hi], bset[hj])) break;
      ++edge_idx;
    }
    if (edge_idx == back[step].size()) return seed(step + 1);
    int hj = order[back[step][edge_idx]];

    VertexSet free_i = ~used & allowed[hi] & g.all_vertices();
    VertexSet free_j = ~used & allowed[hj] & g.all_vertices();
    VertexSet corridor = free_i | free_j;
    // Joint feasibility: some path must survive between the two sets.
    if (!(reach(bset[hi], corridor | bset[hj]) & bset[hj])) return false;
    // Grow either endpoint set by one adjacent and still-useful vertex.
    VertexSet into_j = reach(bset[hj], corridor | bset[hj]);
    VertexSet cand_i = gneigh(bset[hi]) & free_i & into_j;
    while (cand_i) {
      int v = lowest_vertex(cand_i);
      cand_i &= cand_i - 1;
      used |= vbit(v);
      bset[hi] |= vbit(v);
      if (grow(step, edge_idx)) return true;
      bset[hi] &= ~vbit(v);
      used &= ~vbit(v);
    }
    VertexSet into_i = reach(bset[hi], corridor | bset[hi]);
    VertexSet cand_j = gneigh(bset[hj]) & free_j & into_i;
    while (cand_j) {
      int v = lowest_vertex(cand_j);
      cand_j &= cand_j - 1;
      used |= vbit(v);
      bset[hj] |= vbit(v);
      if (grow(step, edge_idx)) return true;
      bset[hj] &= ~vbit(v);
      used &= ~vbit(v);
    }
    return false;
  }

  bool seed(int step) {
    if (step == h.vertex_count()) return true;
    if (popcount(~used & g.all_vertices()) < h.vertex_count() - step)
      return false;
    int hv = order[step];
    VertexSet cands = ~used & allowed[hv] & g.all_vertices();
    if (h.has_terminals() && h.is_terminal(hv)) {
      // Terminal branch sets must contain the matched g-terminal; seeding it
      // directly is equivalent since sets only grow.
      cands &= term_target(hv);
    }
    while (cands) {
      int v = lowest_vertex(cands);
      cands &= cands - 1;
      used |= vbit(v);
      bset[hv] = vbit(v);
      if (grow(step, 0)) return true;
      bset[hv] = 0;
      used &= ~vbit(v);
    }
    return false;
  }

  // Set by run() per terminal correspondence.
  VertexSet term_x_target = 0, term_y_target = 0;
  VertexSet term_target(int hv) const {
    return hv == h.terminal_x() ? term_x_target : term_y_target;
  }

  bool run() {
    if (!h.has_terminals()) return seed(0);
    for (int flip = 0; flip < 2; ++flip) {
      term_x_target = vbit(flip ? g.terminal_y() : g.terminal_x());
      term_y_target = vbit(flip ? g.terminal_x() : g.terminal_y());
      used = 0;
      std::fill(bset.begin(), bset.end(), VertexSet{0});
      if (seed(0)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_minor(const LabeledGraph& h, const LabeledGraph& g) {
  if (h.has_terminals() != g.has_terminals()) return false;
  if (h.vertex_count() > g.vertex_count()) return false;
  if (h.edge_count() > g.edge_count()) return false;
  if (h.vertex_count() == 0) return true;
  if (h.vertex_count() == g.vertex_count() && h.edge_count() == g.edge_count())
    return is_isomorphic(h, g);
  return MinorSearch(h, g).run();
}

namespace {

struct SubdivisionSearch {
  const LabeledGraph& h;
  const LabeledGraph& g;
  bool swap_terminals = false;
  std::vector<int> image;  // h vertex -> g vertex
  VertexSet used = 0;      // vertices claimed by images and path interiors

  SubdivisionSearch(const LabeledGraph& hh, const LabeledGraph& gg)
      : h(hh), g(gg), image(hh.vertex_count(), -1) {}

  bool feasible_image(int hv, int gv) const {
    if (g.degree(gv) < h.degree(hv)) return false;
    if (h.has_terminals() && g.has_terminals()) {
      int hx = h.terminal_x(), hy = h.terminal_y();
      int wantx = swap_terminals ? g.terminal_y() : g.terminal_x();
      int wanty = swap_terminals ? g.terminal_x() : g.terminal_y();
      if (hv == hx) return gv == wantx;
      if (hv == hy) return gv == wanty;
      if (gv == wantx || gv == wanty) return false;
    }
    return true;
  }

  bool connect(size_t ei, const std::vector<Edge>& hedges) {
    if (ei == hedges.size()) return true;
    int a = image[hedges[ei].u], b = image[hedges[ei].v];
    // Path a..b with interior off every claimed vertex.
    std::function<bool(int, VertexSet)> walk = [&](int v, VertexSet mine) {
      if (g.has_edge(v, b)) {
        used |= mine;
        if (connect(ei + 1, hedges)) return true;
        used &= ~mine;
      }
      // Image vertices are always in `used`, so interiors avoid them too.
      VertexSet options = g.neighbors(v) & ~used & ~mine & ~vbit(b);
      while (options) {
        int w = lowest_vertex(options);
        options &= options - 1;
        if (walk(w, mine | vbit(w))) return true;
      }
      return false;
    };
    return walk(a, 0);
  }

  bool assign(int hv) {
    if (hv == h.vertex_count()) return connect(0, h.edges());
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if (used & vbit(gv)) continue;
      if (!feasible_image(hv, gv)) continue;
      image[hv] = gv;
      used |= vbit(gv);
      if (assign(hv + 1)) return true;
      used &= ~vbit(gv);
      image[hv] = -1;
    }
    return false;
  }

  bool run() {
    if (!h.has_terminals() || !g.has_terminals()) return assign(0);
    for (int flip = 0; flip < 2; ++flip) {
      swap_terminals = flip == 1;
      image.assign(h.vertex_count(), -1);
      used = 0;
      if (assign(0)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_subdivision(const LabeledGraph& pattern,
                          const LabeledGraph& host) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  return SubdivisionSearch(pattern, host).run();
}

}  // namespace cascade
