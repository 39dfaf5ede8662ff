#include "cascade/genus.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cascade/planarity.hpp"
#include "cascade/structure.hpp"

namespace cascade {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point at{};
  bool enabled = false;
  long counter = 0;

  static Deadline from_ms(int ms) {
    Deadline d;
    if (ms > 0) {
      d.enabled = true;
      d.at = Clock::now() + std::chrono::milliseconds(ms);
    }
    return d;
  }
  void check() {
    if (!enabled) return;
    if ((++counter & 1023) == 0 && Clock::now() > at)
      throw TimeoutError("genus search timed out");
  }
};

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : 0; }

bool is_bipartite(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbor_list(v)) {
        if (side[u] < 0) {
          side[u] = side[v] ^ 1;
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Faces have length >= 3 (>= 4 when bipartite), so |F| <= 2m/3 (resp. 2m/4).
int density_lower_bound(const LabeledGraph& g, std::string* which) {
  int n = g.vertex_count(), m = g.edge_count();
  if (n < 3 || m < 3) return 0;
  int lb = ceil_div(3 * (2 - n + m) - 2 * m, 3);
  std::string name = "density";
  if (is_bipartite(g)) {
    int lb2 = ceil_div(2 * (2 - n + m) - m, 2);
    if (lb2 > lb) {
      lb = lb2;
      name = "bipartite-density";
    }
  }
  if (lb < 0) lb = 0;
  if (which && lb > 0) *which = name;
  return lb;
}

bool two_disjoint_kuratowskis(const LabeledGraph& g) {
  auto k1 = find_kuratowski(g);
  if (!k1) return false;
  VertexSet core = 0;
  for (int v = 0; v < k1->vertex_count(); ++v)
    if (k1->degree(v) > 0) core |= vbit(v);
  LabeledGraph rest = g.induced_subgraph(g.all_vertices() & ~core);
  return !is_planar(rest);
}

// Edge order with connected prefixes: a root vertex of maximum degree, then
// repeatedly all edges inside the placed set (lexicographic) before the next
// frontier vertex (most placed neighbors, then highest degree).
std::vector<Edge> insertion_order(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<Edge> order;
  std::vector<char> edge_done(n * n, 0);
  VertexSet placed = 0;
  auto emit = [&](int u, int v) {
    order.emplace_back(u, v);
    Edge e(u, v);
    edge_done[e.u * n + e.v] = 1;
  };
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  placed = vbit(root);
  int placed_count = 1;
  while (placed_count < n || static_cast<int>(order.size()) < g.edge_count()) {
    bool found_chord = false;
    for (int u = 0; u < n && !found_chord; ++u) {
      if (!(placed & vbit(u))) continue;
      for (int v : g.neighbor_list(u)) {
        if (v < u || !(placed & vbit(v)) || edge_done[u * n + v]) continue;
        emit(u, v);
        found_chord = true;
        break;
      }
    }
    if (found_chord) continue;
    if (placed_count == n) break;
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed & vbit(v)) continue;
      int links = popcount(g.neighbors(v) & placed);
      if (links == 0) continue;
      if (best < 0 || links > best_links ||
          (links == best_links && g.degree(v) > g.degree(best)))
        best = v, best_links = links;
    }
    if (best < 0)
      throw DisconnectedGraphError("genus search requires a connected graph");
    int anchor = lowest_vertex(g.neighbors(best) & placed);
    emit(anchor, best);
    placed |= vbit(best);
    ++placed_count;
  }
  return order;
}

struct GapInfo {
  int index;  // gap after rotation[v][index]
  int face;
  int side;
};

// Depth-first edge insertion over a fixed order. Maintains the partial
// embedding directly; faces are retraced at each chord step, which doubles
// as a consistency check against the predicted genus increments.
struct Inserter {
  const LabeledGraph& g;
  int n;
  int target;
  Deadline& deadline;
  std::function<bool(const Embedding&, int)> leaf;  // returns true to stop

  std::vector<Edge> order;
  Embedding emb;
  std::vector<char> placed;
  int placed_count = 0, edges_in = 0, faces = 0;
  long node_budget = -1;  // abort the walk after this many nodes (< 0: never)
  long nodes = 0;
  bool budget_hit = false;

  // trace scratch, stamped to avoid clearing
  std::vector<int> orbit_of, orbit_stamp;
  std::vector<int> mirror_min;
  int stamp = 0;

  Inserter(const LabeledGraph& gg, int tgt, Deadline& dl)
      : g(gg), n(gg.vertex_count()), target(tgt), deadline(dl), emb(n) {
    order = insertion_order(g);
    placed.assign(n, 0);
    orbit_of.assign(2 * n * n, 0);
    orbit_stamp.assign(2 * n * n, -1);
  }

  int genus_now() const { return 2 - placed_count + edges_in - faces; }

  int state_id(int u, int v, int s) const { return ((u * n + v) << 1) | s; }

  std::tuple<int, int, int> next_state(int u, int v, int s) const {
    int s2 = s ^ (emb.edge_negative(u, v) ? 1 : 0);
    const auto& rot = emb.rotation[v];
    int d = static_cast<int>(rot.size());
    int i = 0;
    while (rot[i] != u) ++i;
    int w = s2 == 0 ? rot[(i + 1) % d] : rot[(i + d - 1) % d];
    return {v, w, s2};
  }

  // Traces the faces of the current partial embedding; fills gap info for
  // the requested vertices and returns the face count.
  int trace(int want_u, std::vector<GapInfo>* gaps_u, int want_v,
            std::vector<GapInfo>* gaps_v) {
    ++stamp;
    int orbits = 0;
    std::vector<std::pair<int, int>> reps;  // first state of each orbit
    std::vector<int> rep_side;
    for (int u = 0; u < n; ++u) {
      if (!placed[u]) continue;
      for (int v : emb.rotation[u]) {
        for (int s = 0; s < 2; ++s) {
          int sid = state_id(u, v, s);
          if (orbit_stamp[sid] == stamp) continue;
          int id = orbits++;
          int a = u, b = v, side = s;
          do {
            int cur = state_id(a, b, side);
            orbit_stamp[cur] = stamp;
            orbit_of[cur] = id;
            std::tie(a, b, side) = next_state(a, b, side);
          } while (!(a == u && b == v && side == s));
          reps.emplace_back(u, v);
          rep_side.push_back(s);
        }
      }
    }
    // Canonical face id: min of the orbit and its mirror orbit. The mirror
    // of (a->b, s) is (b->a, !s xor neg(ab)): the reversed walk crosses each
    // gap with the opposite local side.
    mirror_min.assign(orbits, 0);
    for (int o = 0; o < orbits; ++o) {
      auto [a, b] = reps[o];
      int ms = rep_side[o] ^ 1 ^ (emb.edge_negative(a, b) ? 1 : 0);
      int mo = orbit_of[state_id(b, a, ms)];
      mirror_min[o] = std::min(o, mo);
    }
    auto record = [&](int v, std::vector<GapInfo>* out) {
      if (!out) return;
      out->clear();
      const auto& rot = emb.rotation[v];
      int d = static_cast<int>(rot.size());
      for (int i = 0; i < d; ++i) {
        int u = rot[i];
        // The gap after position i is crossed either by a side-0 transit
        // arriving from rot[i], or a side-1 transit arriving from rot[i+1].
        int s_in0 = emb.edge_negative(u, v) ? 1 : 0;  // arrival side giving s2=0
        int o0 = orbit_of[state_id(u, v, s_in0)];
        int w = rot[(i + 1) % d];
        int s_in1 = emb.edge_negative(w, v) ? 0 : 1;
        int o1 = orbit_of[state_id(w, v, s_in1)];
        if (mirror_min[o0] != mirror_min[o1])
          throw std::logic_error("gap face mismatch between twin transits");
        // Record the side as seen by the representative orbit so that the
        // split/twist classification is consistent within a face.
        int side = (o0 == mirror_min[o0]) ? 0 : 1;
        out->push_back({i, mirror_min[o0], side});
      }
    };
    record(want_u, gaps_u);
    record(want_v, gaps_v);
    if (orbits % 2 != 0) throw std::logic_error("odd orbit count");
    return orbits / 2;
  }

  void insert_at(int v, int gap_after, int w) {
    auto& rot = emb.rotation[v];
    rot.insert(rot.begin() + gap_after + 1, w);
  }
  void remove_neighbor(int v, int w) {
    auto& rot = emb.rotation[v];
    rot.erase(std::find(rot.begin(), rot.end(), w));
  }

  bool dfs(size_t ei) {
    deadline.check();
    if (node_budget >= 0 && ++nodes > node_budget) {
      budget_hit = true;
      return true;  // unwind; the caller restarts without a budget
    }
    if (ei == order.size()) {
      if (genus_now() > target)
        throw std::logic_error("leaf exceeded genus target");
      return leaf(emb, genus_now());
    }
    Edge e = order[ei];
    int u = e.u, v = e.v;
    if (!placed[u] && !placed[v]) {  // root edge
      placed[u] = placed[v] = 1;
      placed_count += 2;
      emb.rotation[u] = {v};
      emb.rotation[v] = {u};
      edges_in = 1;
      faces = 1;
      bool stop = dfs(ei + 1);
      emb.rotation[u].clear();
      emb.rotation[v].clear();
      placed[u] = placed[v] = 0;
      placed_count -= 2;
      edges_in = 0;
      faces = 0;
      return stop;
    }
    if (!placed[u] || !placed[v]) {  // pendant vertex
      int anchor = placed[u] ? u : v;
      int fresh = placed[u] ? v : u;
      int d = static_cast<int>(emb.rotation[anchor].size());
      for (int gap = 0; gap < d; ++gap) {
        insert_at(anchor, gap, fresh);
        emb.rotation[fresh] = {anchor};
        placed[fresh] = 1;
        ++placed_count;
        ++edges_in;
        if (dfs(ei + 1)) return true;
        --edges_in;
        --placed_count;
        placed[fresh] = 0;
        emb.rotation[fresh].clear();
        remove_neighbor(anchor, fresh);
      }
      return false;
    }
    // Chord between placed endpoints.
    std::vector<GapInfo> gu, gv;
    int traced = trace(u, &gu, v, &gv);
    if (traced != faces)
      throw std::logic_error("face count drifted from prediction");
    int budget = target - genus_now();
    // Splits first, then twists, then merges: cheapest surface first.
    for (int pass = 0; pass < 3; ++pass) {
      if (pass == 1 && budget < 1) break;
      if (pass == 2 && budget < 2) break;
      for (const GapInfo& a : gu) {
        for (const GapInfo& b : gv) {
          bool same = a.face == b.face;
          if ((pass <= 1) != same) continue;
          int lambdas[2];
          int nl = 0;
          if (pass == 0)
            lambdas[nl++] = a.side ^ b.side;
          else if (pass == 1)
            lambdas[nl++] = a.side ^ b.side ^ 1;
          else {
            lambdas[nl++] = 0;
            lambdas[nl++] = 1;
          }
          int dface = pass == 0 ? +1 : (pass == 1 ? 0 : -1);
          for (int li = 0; li < nl; ++li) {
            insert_at(u, a.index, v);
            insert_at(v, b.index, u);
            emb.set_negative(u, v, lambdas[li] == 1);
            ++edges_in;
            faces += dface;
            if (dfs(ei + 1)) return true;
            faces -= dface;
            --edges_in;
            emb.set_negative(u, v, false);
            remove_neighbor(u, v);
            remove_neighbor(v, u);
          }
        }
      }
    }
    return false;
  }

  bool run() {
    if (order.empty()) {
      // Single vertex (or empty graph): one face, genus 0.
      placed_count = n;
      faces = n > 0 ? 1 : 0;
      return leaf(emb, 0);
    }
    return dfs(0);
  }
};

struct Unit {
  LabeledGraph graph;
  std::vector<int> vmap;  // unit vertex -> original vertex
};

std::vector<Unit> split_units(const LabeledGraph& g, bool use_blocks) {
  std::vector<Unit> units;
  auto add_unit = [&](const std::vector<int>& verts) {
    VertexSet keep = 0;
    for (int v : verts) keep |= vbit(v);
    Unit u;
    u.graph = g.induced_subgraph(keep).underlying();
    u.vmap = verts;  // ascending order matches induced_subgraph relabeling
    units.push_back(std::move(u));
  };
  if (use_blocks) {
    BlockDecomposition bd = blocks(g);
    for (const auto& blk : bd.blocks) add_unit(blk);
  } else {
    VertexSet seen = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (seen & vbit(v)) continue;
      VertexSet comp = g.component_of(v);
      seen |= comp;
      std::vector<int> verts;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (comp & vbit(w)) verts.push_back(w);
      add_unit(verts);
    }
  }
  return units;
}

}  // namespace

std::optional<Embedding> genus_at_most(const LabeledGraph& g, int target,
                                       const GenusOptions& opt) {
  if (!g.is_connected())
    throw DisconnectedGraphError("genus_at_most: graph must be connected");
  Deadline dl = Deadline::from_ms(opt.timeout_ms);
  std::optional<Embedding> found;
  Inserter ins(g, target, dl);
  ins.leaf = [&](const Embedding& emb, int) {
    found = emb;
    return true;
  };
  ins.run();
  return found;
}

void enumerate_embeddings(
    const LabeledGraph& g, int cap,
    const std::function<bool(const Embedding&, int)>& visit,
    const GenusOptions& opt) {
  if (!g.is_connected())
    throw DisconnectedGraphError("enumerate_embeddings: graph must be connected");
  Deadline dl = Deadline::from_ms(opt.timeout_ms);
  Inserter ins(g, cap, dl);
  ins.leaf = [&](const Embedding& emb, int genus) { return !visit(emb, genus); };
  ins.run();
}

namespace {

// Genus of one connected block-or-component unit, with cache. `cap` bounds
// the work: values above it come back as cap + 1 and are not cached.
int unit_genus(const LabeledGraph& unit, const GenusOptions& opt, int cap,
               std::optional<Embedding>* witness, std::string* trace) {
  int m = unit.edge_count();
  *trace = "search";
  if (m == 0 || unit.vertex_count() <= 2) {
    if (witness) *witness = default_embedding(unit);
    *trace = "density";
    return 0;
  }
  CanonicalForm key;
  if (opt.cache) {
    key = canonical_form(unit);
    if (auto hit = opt.cache->lookup(key)) {
      if (witness && *hit <= cap) {
        GenusOptions sub = opt;
        sub.cache = nullptr;
        *witness = genus_at_most(unit, *hit, sub);
      }
      *trace = "cache";
      return *hit;
    }
  }
  int result;
  bool exact = true;
  if (is_planar(unit)) {
    result = 0;
    *trace = "planar";
    if (witness) *witness = planar_embedding(unit);
  } else {
    int lb = 1;
    std::string which = "nonplanarity";
    std::string dname;
    int dlb = density_lower_bound(unit, &dname);
    if (dlb > lb) {
      lb = dlb;
      which = dname;
    }
    if (lb < 2 && cap >= 1 && opt.use_two_kuratowski_bound &&
        two_disjoint_kuratowskis(unit)) {
      lb = 2;
      which = "disjoint-kuratowski";
    }
    if (lb > cap) {
      *trace = which;
      return cap + 1;  // a sound lower bound already clears the cap
    }
    // Iterative deepening. Genus-one targets first run under a node budget;
    // if the tree is large, the disjoint K-graph certificate usually settles
    // genus >= 2 far cheaper than exhausting the search.
    int target = lb;
    std::optional<Embedding> emb;
    bool certificate_tried = false;
    for (;;) {
      long budget = (target <= 1 && !certificate_tried &&
                     opt.use_two_kuratowski_bound)
                        ? 20000
                        : -1;
      Deadline dl = Deadline::from_ms(opt.timeout_ms);
      Inserter ins(unit, target, dl);
      ins.node_budget = budget;
      std::optional<Embedding> found;
      ins.leaf = [&](const Embedding& e, int) {
        found = e;
        return true;
      };
      ins.run();
      if (found) {
        emb = std::move(found);
        break;
      }
      if (ins.budget_hit) {
        certificate_tried = true;
        if (has_two_disjoint_genus_witnesses(unit)) {
          if (cap < 2) {
            *trace = "disjoint-kgraph";
            return cap + 1;
          }
          target = 2;
        }
        continue;  // rerun unbudgeted (possibly at the certified target)
      }
      if (++target > cap) break;
    }
    if (!emb) {
      *trace = "search";
      return cap + 1;
    }
    result = euler_genus_of_embedding(unit, *emb);
    *trace = target == lb && result == lb ? which : "search";
    if (witness) *witness = std::move(emb);
    exact = true;
  }
  if (opt.cache && exact) opt.cache->insert(key, result);
  return result;
}

}  // namespace

GenusResult euler_genus(const LabeledGraph& g, const GenusOptions& opt) {
  GenusResult out;
  if (g.vertex_count() == 0) {
    out.witness = Embedding(0);
    out.lower_bound_trace = "density";
    return out;
  }
  std::vector<Unit> units = split_units(g, opt.use_blocks);
  bool assemble = g.is_connected() && opt.want_witness &&
                  opt.genus_cap >= g.edge_count();
  Embedding combined(g.vertex_count());
  std::vector<std::string> traces;
  for (const Unit& u : units) {
    std::optional<Embedding> w;
    std::string trace;
    int remaining = opt.genus_cap - out.genus;
    if (remaining < 0) {
      out.genus = opt.genus_cap + 1;
      out.witness.reset();
      out.lower_bound_trace = "block-sum";
      return out;
    }
    out.genus += unit_genus(u.graph, opt, remaining, assemble ? &w : nullptr,
                            &trace);
    traces.push_back(trace);
    if (assemble && w) {
      for (int v = 0; v < u.graph.vertex_count(); ++v) {
        for (int nb : w->rotation[v])
          combined.rotation[u.vmap[v]].push_back(u.vmap[nb]);
        VertexSet neg = w->negative[v];
        while (neg) {
          int nb = lowest_vertex(neg);
          neg &= neg - 1;
          combined.negative[u.vmap[v]] |= vbit(u.vmap[nb]);
        }
      }
    }
  }
  if (out.genus > opt.genus_cap) {
    out.genus = opt.genus_cap + 1;
    out.lower_bound_trace = "block-sum";
    return out;
  }
  if (assemble) out.witness = std::move(combined);
  out.lower_bound_trace = units.size() > 1 ? "block-sum" : traces.front();
  return out;
}

GenusResult euler_genus_plus(const LabeledGraph& g, const GenusOptions& opt) {
  return euler_genus(augment(g), opt);
}

int genus_lower_bound(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int total = 0;
  for (const Unit& u : split_units(g, true)) {
    int lb = density_lower_bound(u.graph, nullptr);
    if (lb < 1 && !is_planar(u.graph)) lb = 1;
    if (lb >= 1 && lb < 2 && has_two_disjoint_genus_witnesses(u.graph)) lb = 2;
    total += lb;
  }
  return total;
}

}  // namespace cascade
