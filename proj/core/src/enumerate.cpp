#include "cascade/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "cascade/canonical.hpp"
#include "cascade/io.hpp"
#include "cascade/minor.hpp"
#include "cascade/planarity.hpp"

namespace cascade {

// --- obstruction dataset -----------------------------------------------------

ObstructionDataset load_obstructions(const std::string& path,
                                     VerifyLevel level, GenusCache* cache) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open obstruction file: " + path);
  ObstructionDataset ds;
  std::vector<LabeledGraph>* section = nullptr;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "#E1") {
      section = &ds.e1;
      continue;
    }
    if (line == "#E1STAR_EXTRA") {
      section = &ds.e1_star_extra;
      continue;
    }
    if (line[0] == '#') continue;
    if (!section) throw DatasetError("graph line before a section marker");
    section->push_back(from_graph6(line, lineno));
  }
  if (ds.e1.size() != 35)
    throw DatasetError(
        "count-mismatch: expected 35 minor-minimal entries, got " +
        std::to_string(ds.e1.size()));
  if (ds.e1_star_extra.size() != 68)
    throw DatasetError("count-mismatch: expected 68 extra entries, got " +
                       std::to_string(ds.e1_star_extra.size()));

  GenusOptions gopt;
  gopt.cache = cache;
  gopt.want_witness = false;
  auto check_genus2 = [&](const LabeledGraph& q, const char* which, size_t i) {
    if (euler_genus(q, gopt).genus != 2)
      throw DatasetError(std::string("validation-failure: entry in ") + which +
                         " at index " + std::to_string(i) +
                         " does not have genus two");
  };
  auto spot_indices = [](size_t n) {
    std::vector<size_t> idx;
    size_t want = std::min<size_t>(10, n);
    for (size_t i = 0; i < want; ++i) idx.push_back(i * n / want);
    return idx;
  };
  // Nonplanarity is cheap enough to demand everywhere.
  for (size_t i = 0; i < ds.e1.size(); ++i)
    if (is_planar(ds.e1[i]))
      throw DatasetError("validation-failure: planar E1 entry " +
                         std::to_string(i));
  for (size_t i = 0; i < ds.e1_star_extra.size(); ++i)
    if (is_planar(ds.e1_star_extra[i]))
      throw DatasetError("validation-failure: planar extra entry " +
                         std::to_string(i));
  if (level == VerifyLevel::Full) {
    for (size_t i = 0; i < ds.e1.size(); ++i) check_genus2(ds.e1[i], "E1", i);
    for (size_t i = 0; i < ds.e1_star_extra.size(); ++i)
      check_genus2(ds.e1_star_extra[i], "E1STAR_EXTRA", i);
    ClassifyOptions copt;
    copt.cache = cache;
    for (size_t i = 0; i < ds.e1.size(); ++i)
      if (!is_parameter_critical(ds.e1[i], ParameterId::EulerGenus, copt))
        throw DatasetError("validation-failure: non-critical E1 entry " +
                           std::to_string(i));
  } else {
    for (size_t i : spot_indices(ds.e1.size()))
      check_genus2(ds.e1[i], "E1", i);
    for (size_t i : spot_indices(ds.e1_star_extra.size()))
      check_genus2(ds.e1_star_extra[i], "E1STAR_EXTRA", i);
  }
  return ds;
}

std::vector<LabeledGraph> derive_planar_c1plus(const ObstructionDataset& ds,
                                               GenusCache* cache) {
  ClassifyOptions copt;
  copt.cache = cache;
  std::set<std::string> e1_codes;
  for (const LabeledGraph& q : ds.e1)
    e1_codes.insert(canonical_form(q.underlying()).canonical_code);

  std::set<std::string> seen;
  std::vector<LabeledGraph> out;
  auto offer = [&](LabeledGraph h) {
    if (!seen.insert(canonical_form(h).canonical_code).second) return;
    // Membership demands full criticality for the augmented parameter; both
    // derivation routes are re-verified against it.
    if (is_parameter_critical(h, ParameterId::EulerGenusPlus, copt))
      out.push_back(std::move(h));
  };
  for (const LabeledGraph& q : ds.e1) {
    for (const Edge& e : q.edges()) {
      LabeledGraph h = q;
      h.remove_edge(e.u, e.v);
      h.set_terminals(e.u, e.v);
      if (!is_planar(h)) continue;
      offer(std::move(h));
    }
  }
  for (const LabeledGraph& q : ds.e1_star_extra) {
    for (const Edge& e : q.edges()) {
      LabeledGraph h = q;
      h.remove_edge(e.u, e.v);
      h.set_terminals(e.u, e.v);
      if (!is_planar(h)) continue;
      LabeledGraph merged = identify_terminals(h);
      if (!e1_codes.count(canonical_form(merged).canonical_code)) continue;
      offer(std::move(h));
    }
  }
  return out;
}

// --- base catalog --------------------------------------------------------------

namespace {

// Builds edge lists against named vertices.
struct CoreBuild {
  std::map<std::string, int> at;
  std::vector<Edge> edges;
  int next = 0;

  int vertex(const std::string& name) {
    auto it = at.find(name);
    if (it != at.end()) return it->second;
    at.emplace(name, next);
    return next++;
  }
  void edge(const std::string& a, const std::string& b) {
    edges.emplace_back(vertex(a), vertex(b));
  }
  LabeledGraph graph() const {
    LabeledGraph g(next);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    g.set_terminals(at.at("x"), at.at("y"));
    return g;
  }
};

// K4 core on {terminal, w1, w2, w3}; the boundary is the w-triangle.
void build_k4_core(CoreBuild& c, const std::string& prefix,
                   const std::string& terminal) {
  std::string w1 = prefix + "w1", w2 = prefix + "w2", w3 = prefix + "w3";
  c.edge(terminal, w1);
  c.edge(terminal, w2);
  c.edge(terminal, w3);
  c.edge(w1, w2);
  c.edge(w2, w3);
  c.edge(w1, w3);
}

// K2,3 core: branch vertices p q, boundary interiors a b, terminal branch
// p-terminal-q.
void build_k23_core(CoreBuild& c, const std::string& prefix,
                    const std::string& terminal) {
  std::string p = prefix + "p", q = prefix + "q", a = prefix + "a",
              b = prefix + "b";
  c.edge(p, a);
  c.edge(a, q);
  c.edge(p, b);
  c.edge(b, q);
  c.edge(p, terminal);
  c.edge(terminal, q);
}

bool contains_any_base_minor(const LabeledGraph& g,
                             const std::vector<LabeledGraph>& bases) {
  for (const LabeledGraph& b : bases)
    if (is_minor(b, g)) return true;
  return false;
}

bool deletion_minimal_for_bases(const LabeledGraph& g,
                                const std::vector<LabeledGraph>& bases) {
  for (const Edge& e : g.edges()) {
    LabeledGraph h = g;
    h.remove_edge(e.u, e.v);
    if (contains_any_base_minor(h, bases)) return false;
  }
  return true;
}

}  // namespace

BaseCatalog build_bases() {
  BaseCatalog cat;
  cat.linkages = {
      {'a', true, {{"w1", "w2", "w3"}}},
      {'b', false, {{"a", "b"}}},
      {'c', true, {{"w1", "w3"}, {"w2"}}},
      {'d', false, {{"a"}, {"b"}}},
      {'e', false, {{"a", "b"}, {"p"}}},
      {'f', true, {{"w1"}, {"w2"}, {"w3"}}},
      {'g', false, {{"a"}, {"p"}, {"b"}}},
      {'h', false, {{"a", "b"}, {"p"}, {"q"}}},
      {'i', false, {{"a"}, {"p"}, {"b"}, {"q"}}},
  };

  auto assemble = [](const std::function<void(CoreBuild&)>& build) {
    CoreBuild c;
    c.vertex("x");
    c.vertex("y");
    build(c);
    return c.graph();
  };

  // Five gluings; the y-side feet are contracted onto its core vertices.
  cat.bases.push_back(assemble([](CoreBuild& c) {  // f + f
    build_k4_core(c, "s", "x");
    build_k4_core(c, "t", "y");
    c.edge("sw1", "tw1");
    c.edge("sw2", "tw2");
    c.edge("sw3", "tw3");
  }));
  cat.bases.push_back(assemble([](CoreBuild& c) {  // f + g
    build_k4_core(c, "s", "x");
    build_k23_core(c, "t", "y");
    c.edge("sw1", "ta");
    c.edge("sw2", "tp");
    c.edge("sw3", "tb");
  }));
  cat.bases.push_back(assemble([](CoreBuild& c) {  // g + g aligned
    build_k23_core(c, "s", "x");
    build_k23_core(c, "t", "y");
    c.edge("sa", "ta");
    c.edge("sp", "tp");
    c.edge("sb", "tb");
  }));
  cat.bases.push_back(assemble([](CoreBuild& c) {  // g + g crossed
    build_k23_core(c, "s", "x");
    build_k23_core(c, "t", "y");
    c.edge("sa", "tp");
    c.edge("sp", "ta");
    c.edge("sb", "tb");
  }));
  cat.bases.push_back(assemble([](CoreBuild& c) {  // i + i rotated
    build_k23_core(c, "s", "x");
    build_k23_core(c, "t", "y");
    c.edge("sa", "tq");
    c.edge("sp", "ta");
    c.edge("sb", "tp");
    c.edge("sq", "tb");
  }));
  for (const LabeledGraph& b : cat.bases)
    if (!is_planar(b))
      throw std::logic_error("base catalog: nonplanar base graph");

  // Closure under planarity- and minimality-preserving degree-4 splits.
  std::set<std::string> seen;
  std::vector<LabeledGraph> queue;
  for (const LabeledGraph& b : cat.bases) {
    seen.insert(canonical_form(b).canonical_code);
    cat.bases_star.push_back(b);
    queue.push_back(b);
  }
  while (!queue.empty()) {
    LabeledGraph g = queue.back();
    queue.pop_back();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 4 || g.is_terminal(v)) continue;
      std::vector<int> nb = g.neighbor_list(v);
      static const int partner[3] = {1, 2, 3};  // second member with nb[0]
      for (int pidx = 0; pidx < 3; ++pidx) {
        LabeledGraph h(g.vertex_count() + 1);
        int fresh = g.vertex_count();
        for (const Edge& e : g.edges())
          if (e.u != v && e.v != v) h.add_edge(e.u, e.v);
        h.set_terminals(g.terminal_x(), g.terminal_y());
        VertexSet stay = vbit(nb[0]) | vbit(nb[partner[pidx]]);
        for (int u : nb) h.add_edge((stay & vbit(u)) ? v : fresh, u);
        h.add_edge(v, fresh);
        if (!is_planar(h)) continue;
        if (!contains_any_base_minor(h, cat.bases)) continue;
        if (!deletion_minimal_for_bases(h, cat.bases)) continue;
        if (seen.insert(canonical_form(h).canonical_code).second) {
          cat.bases_star.push_back(h);
          queue.push_back(h);
        }
      }
    }
  }
  return cat;
}

// --- nonplanar extensions -------------------------------------------------------

namespace {

struct FaceInfo {
  std::vector<int> verts;  // boundary walk order
  VertexSet vset = 0;
  std::vector<Edge> edge_list;
};

// Distinct planar face structures of the base (usually one; every one is
// used so that reconstruction ambiguity only overgenerates).
std::vector<std::vector<FaceInfo>> planar_face_sets(const LabeledGraph& g) {
  std::vector<std::vector<FaceInfo>> out;
  std::set<std::string> signatures;
  enumerate_embeddings(g, 0, [&](const Embedding& emb, int) {
    for (VertexSet m : emb.negative)
      if (m) return true;
    FaceSet fs = trace_faces(g, emb);
    std::vector<FaceInfo> faces;
    std::vector<std::string> sig_parts;
    for (const auto& walk : fs.faces) {
      FaceInfo f;
      for (const Dart& d : walk) {
        f.verts.push_back(d.first);
        f.vset |= vbit(d.first);
        f.edge_list.emplace_back(d.first, d.second);
      }
      std::sort(f.edge_list.begin(), f.edge_list.end());
      f.edge_list.erase(std::unique(f.edge_list.begin(), f.edge_list.end()),
                        f.edge_list.end());
      std::string part;
      for (const Edge& e : f.edge_list)
        part += std::to_string(e.u) + "," + std::to_string(e.v) + ";";
      sig_parts.push_back(part);
      faces.push_back(std::move(f));
    }
    std::sort(sig_parts.begin(), sig_parts.end());
    std::string sig;
    for (const auto& s : sig_parts) sig += s + "|";
    if (signatures.insert(sig).second) out.push_back(std::move(faces));
    return true;
  });
  return out;
}

// An attachment site: an existing vertex or a fresh point on an edge.
struct Position {
  bool on_edge = false;
  int vertex = -1;
  Edge edge;
};

struct ExtensionBuilder {
  LabeledGraph g;
  std::map<std::pair<int, int>, int> sub_at;

  explicit ExtensionBuilder(const LabeledGraph& b) : g(b) {}

  int grow() {
    LabeledGraph h(g.vertex_count() + 1);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    h.set_terminals(g.terminal_x(), g.terminal_y());
    g = h;
    return g.vertex_count() - 1;
  }

  int materialize(const Position& p) {
    if (!p.on_edge) return p.vertex;
    auto key = std::make_pair(p.edge.u, p.edge.v);
    auto it = sub_at.find(key);
    if (it != sub_at.end()) return it->second;
    int fresh = grow();
    g.remove_edge(p.edge.u, p.edge.v);
    g.add_edge(p.edge.u, fresh);
    g.add_edge(fresh, p.edge.v);
    sub_at.emplace(key, fresh);
    return fresh;
  }
};

}  // namespace

std::vector<LabeledGraph> enumerate_extensions(const LabeledGraph& base,
                                               const CensusOptions& opt) {
  std::vector<LabeledGraph> out;
  std::set<std::string> seen;
  auto emit = [&](const LabeledGraph& g) {
    if (out.size() >= opt.candidate_budget) return;
    if (g.has_edge(g.terminal_x(), g.terminal_y())) return;
    if (is_planar(g)) return;
    if (seen.insert(canonical_form(g).canonical_code).second)
      out.push_back(g);
  };

  std::vector<int> branch_vertices;
  for (int v = 0; v < base.vertex_count(); ++v)
    if (base.degree(v) >= 3) branch_vertices.push_back(v);

  // Branches of the base: plain edges plus two-edge paths through degree-2
  // vertices (only terminals have degree two here).
  struct BranchPath {
    int a, b;
    int mid;  // -1 for single edges
  };
  std::vector<BranchPath> branch_paths;
  for (const Edge& e : base.edges())
    if (base.degree(e.u) >= 3 && base.degree(e.v) >= 3)
      branch_paths.push_back({e.u, e.v, -1});
  for (int m = 0; m < base.vertex_count(); ++m) {
    if (base.degree(m) != 2) continue;
    std::vector<int> nb = base.neighbor_list(m);
    branch_paths.push_back({nb[0], nb[1], m});
  }
  auto common_branch = [&](int u, int v) {
    for (const BranchPath& bp : branch_paths)
      if ((bp.a == u && bp.b == v) || (bp.a == v && bp.b == u)) return true;
    return false;
  };

  for (const std::vector<FaceInfo>& faces : planar_face_sets(base)) {
    auto position_on_face = [&](const FaceInfo& f, const Position& p) {
      return p.on_edge ? std::find(f.edge_list.begin(), f.edge_list.end(),
                                   p.edge) != f.edge_list.end()
                       : ((f.vset >> p.vertex) & 1) != 0;
    };
    auto cofacial = [&](const Position& p1, const Position& p2) {
      for (const FaceInfo& f : faces)
        if (position_on_face(f, p1) && position_on_face(f, p2)) return true;
      return false;
    };

    std::vector<Position> positions;
    for (int v = 0; v < base.vertex_count(); ++v)
      positions.push_back({false, v, {}});
    for (const Edge& e : base.edges()) positions.push_back({true, -1, e});

    // Jumps: a new edge whose ends share no face.
    for (size_t i = 0; i < positions.size(); ++i) {
      for (size_t j = i + 1; j < positions.size(); ++j) {
        const Position& p1 = positions[i];
        const Position& p2 = positions[j];
        if (p1.on_edge && p2.on_edge && p1.edge == p2.edge) continue;
        if (cofacial(p1, p2)) continue;
        ExtensionBuilder eb(base);
        int u = eb.materialize(p1), v = eb.materialize(p2);
        if (eb.g.has_edge(u, v)) continue;
        eb.g.add_edge(u, v);
        emit(eb.g);
      }
    }

    // Crosses: two new edges with interlaced branch-vertex ends on a face.
    for (const FaceInfo& f : faces) {
      std::vector<int> bs;
      for (int v : f.verts)
        if (base.degree(v) >= 3) bs.push_back(v);
      int k = static_cast<int>(bs.size());
      for (int i1 = 0; i1 < k; ++i1)
        for (int i2 = i1 + 1; i2 < k; ++i2)
          for (int i3 = i2 + 1; i3 < k; ++i3)
            for (int i4 = i3 + 1; i4 < k; ++i4) {
              int a = bs[i1], b = bs[i2], c = bs[i3], d = bs[i4];
              if (a == c || b == d || a == b || c == d) continue;
              if (base.has_edge(a, c) || base.has_edge(b, d)) continue;
              ExtensionBuilder eb(base);
              eb.g.add_edge(a, c);
              eb.g.add_edge(b, d);
              emit(eb.g);
            }
    }

    // Tripods: attachments at three branch vertices of one face.
    for (const FaceInfo& f : faces) {
      std::vector<int> bs;
      for (int v : f.verts)
        if (base.degree(v) >= 3 &&
            std::find(bs.begin(), bs.end(), v) == bs.end())
          bs.push_back(v);
      int k = static_cast<int>(bs.size());
      for (int i1 = 0; i1 < k; ++i1)
        for (int i2 = i1 + 1; i2 < k; ++i2)
          for (int i3 = i2 + 1; i3 < k; ++i3) {
            int t[3] = {bs[i1], bs[i2], bs[i3]};
            {
              // Pure tripod: two fresh centers joined to all three.
              ExtensionBuilder eb(base);
              int c1 = eb.grow(), c2 = eb.grow();
              for (int s = 0; s < 3; ++s) {
                eb.g.add_edge(c1, t[s]);
                eb.g.add_edge(c2, t[s]);
              }
              emit(eb.g);
            }
            // Weak form reusing one branch: one center is a point inside a
            // branch joining two attachments.
            for (int rot = 0; rot < 3; ++rot) {
              int ta = t[rot], tb = t[(rot + 1) % 3], tc = t[(rot + 2) % 3];
              for (const BranchPath& bp : branch_paths) {
                if (!((bp.a == ta && bp.b == tb) ||
                      (bp.a == tb && bp.b == ta)))
                  continue;
                ExtensionBuilder eb(base);
                int s = bp.mid >= 0
                            ? bp.mid
                            : eb.materialize({true, -1, Edge(bp.a, bp.b)});
                int c1 = eb.grow();
                eb.g.add_edge(c1, ta);
                eb.g.add_edge(c1, tb);
                eb.g.add_edge(c1, tc);
                if (eb.g.has_edge(s, tc)) continue;
                eb.g.add_edge(s, tc);
                emit(eb.g);
              }
            }
            // Weak form reusing two branches through a shared attachment.
            for (int shared = 0; shared < 3; ++shared) {
              int tm = t[shared], tl = t[(shared + 1) % 3],
                  tr = t[(shared + 2) % 3];
              for (const BranchPath& bp1 : branch_paths) {
                if (!((bp1.a == tl && bp1.b == tm) ||
                      (bp1.a == tm && bp1.b == tl)))
                  continue;
                for (const BranchPath& bp2 : branch_paths) {
                  if (!((bp2.a == tm && bp2.b == tr) ||
                        (bp2.a == tr && bp2.b == tm)))
                    continue;
                  ExtensionBuilder eb(base);
                  int s1 = bp1.mid >= 0
                               ? bp1.mid
                               : eb.materialize({true, -1, Edge(bp1.a, bp1.b)});
                  int s2 = bp2.mid >= 0
                               ? bp2.mid
                               : eb.materialize({true, -1, Edge(bp2.a, bp2.b)});
                  if (eb.g.has_edge(s1, tr) || eb.g.has_edge(s2, tl)) continue;
                  eb.g.add_edge(s1, tr);
                  eb.g.add_edge(s2, tl);
                  emit(eb.g);
                }
              }
            }
          }
    }

    // Triads: a fresh hub joined to three branch vertices, pairwise
    // cofacial but never jointly, never sharing a branch.
    int nb = static_cast<int>(branch_vertices.size());
    for (int i1 = 0; i1 < nb; ++i1)
      for (int i2 = i1 + 1; i2 < nb; ++i2)
        for (int i3 = i2 + 1; i3 < nb; ++i3) {
          int a = branch_vertices[i1], b = branch_vertices[i2],
              c = branch_vertices[i3];
          if (common_branch(a, b) || common_branch(a, c) ||
              common_branch(b, c))
            continue;
          Position pa{false, a, {}}, pb{false, b, {}}, pc{false, c, {}};
          if (!cofacial(pa, pb) || !cofacial(pa, pc) || !cofacial(pb, pc))
            continue;
          bool jointly = false;
          for (const FaceInfo& f : faces)
            if ((f.vset & vbit(a)) && (f.vset & vbit(b)) &&
                (f.vset & vbit(c)))
              jointly = true;
          if (jointly) continue;
          ExtensionBuilder eb(base);
          int hub = eb.grow();
          eb.g.add_edge(hub, a);
          eb.g.add_edge(hub, b);
          eb.g.add_edge(hub, c);
          emit(eb.g);
        }
  }
  return out;
}

// --- low-separation constructions ------------------------------------------------

namespace {

LabeledGraph one_sep_candidate(bool k4_side, bool kuratowski_is_k5) {
  CoreBuild c;
  c.vertex("x");
  c.vertex("y");
  c.vertex("u");
  if (k4_side) {
    build_k4_core(c, "s", "x");
    c.edge("u", "sw1");
    c.edge("u", "sw2");
    c.edge("u", "sw3");
  } else {
    build_k23_core(c, "s", "x");
    c.edge("u", "sa");
    c.edge("u", "sb");
  }
  if (kuratowski_is_k5) {
    std::vector<std::string> k5{"u", "y", "c1", "c2", "c3"};
    for (size_t i = 0; i < k5.size(); ++i)
      for (size_t j = i + 1; j < k5.size(); ++j) c.edge(k5[i], k5[j]);
  } else {
    for (const std::string& l : {"u", "c1", "c2"})
      for (const std::string& r : {"y", "c3", "c4"}) c.edge(l, r);
  }
  return c.graph();
}

// Critical attachment parts on two terminals for the two-separated family.
std::vector<LabeledGraph> two_sep_parts() {
  std::vector<LabeledGraph> parts;
  {
    LabeledGraph g = complete_graph(5);
    g.remove_edge(0, 1);
    g.set_terminals(0, 1);
    parts.push_back(g);
  }
  {
    LabeledGraph g = complete_bipartite(3, 3);
    g.remove_edge(0, 3);
    g.set_terminals(0, 3);
    parts.push_back(g);
  }
  {
    LabeledGraph g = complete_bipartite(3, 3);
    g.set_terminals(0, 1);
    parts.push_back(g);
  }
  return parts;
}

}  // namespace

std::vector<LabeledGraph> enumerate_low_separation() {
  std::vector<LabeledGraph> out;
  std::set<std::string> seen;
  auto emit = [&](const LabeledGraph& g) {
    if (g.has_edge(g.terminal_x(), g.terminal_y())) return;
    if (seen.insert(canonical_form(g).canonical_code).second)
      out.push_back(g);
  };

  // One-separated: a fully linked terminal core against a Kuratowski graph
  // holding the far terminal.
  for (bool k4_side : {true, false})
    for (bool k5 : {true, false}) emit(one_sep_candidate(k4_side, k5));

  // Two-separated, attachment-part families. Feet of the small linkages may
  // be kept as edges or contracted onto their attachment vertex.
  for (int linkage = 0; linkage < 3; ++linkage) {
    int foot_modes = linkage == 1 ? 4 : 2;  // (d) has two contractible feet
    for (int mode = 0; mode < foot_modes; ++mode) {
      for (const LabeledGraph& part : two_sep_parts()) {
        for (int ypick = 0; ypick < part.vertex_count(); ++ypick) {
          if (part.is_terminal(ypick)) continue;
          CoreBuild c;
          c.vertex("x");
          c.vertex("y");
          std::string u1, u2;
          if (linkage == 0) {  // (c): one double foot, one single
            build_k4_core(c, "s", "x");
            u1 = "u1";
            c.edge(u1, "sw1");
            c.edge(u1, "sw3");
            u2 = (mode & 1) ? "sw2" : "u2";
            if (!(mode & 1)) c.edge(u2, "sw2");
          } else if (linkage == 1) {  // (d): two single feet
            build_k23_core(c, "s", "x");
            u1 = (mode & 1) ? "sa" : "u1";
            if (!(mode & 1)) c.edge(u1, "sa");
            u2 = (mode & 2) ? "sb" : "u2";
            if (!(mode & 2)) c.edge(u2, "sb");
          } else {  // (e): one double foot, one single at a branch vertex
            build_k23_core(c, "s", "x");
            u1 = "u1";
            c.edge(u1, "sa");
            c.edge(u1, "sb");
            u2 = (mode & 1) ? "sp" : "u2";
            if (!(mode & 1)) c.edge(u2, "sp");
          }
          std::vector<std::string> names(part.vertex_count());
          names[part.terminal_x()] = u1;
          names[part.terminal_y()] = u2;
          for (int v = 0; v < part.vertex_count(); ++v) {
            if (!names[v].empty()) continue;
            names[v] = v == ypick ? "y" : "t" + std::to_string(v);
          }
          for (const Edge& e : part.edges()) c.edge(names[e.u], names[e.v]);
          emit(c.graph());
        }
      }
    }
  }

  // Two-separated, two-linkage gluings: the y-side three-foot shape with
  // its branch-vertex foot landing on x, against linkage (c) or (d).
  for (int linkage = 0; linkage < 2; ++linkage) {
    CoreBuild c;
    c.vertex("x");
    c.vertex("y");
    build_k23_core(c, "t", "y");
    if (linkage == 0) {
      build_k4_core(c, "s", "x");
      c.edge("ta", "sw1");
      c.edge("ta", "sw3");
      c.edge("tb", "sw2");
    } else {
      build_k23_core(c, "s", "x");
      c.edge("ta", "sa");
      c.edge("tb", "sb");
    }
    c.edge("tp", "x");
    emit(c.graph());
  }
  return out;
}

// --- census ---------------------------------------------------------------------

namespace {

void parallel_for_census(int count, int workers,
                         const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// A vertex of degree below three that is not a terminal kills the first
// cascade condition: the contraction (or lone deletion) at it changes
// neither parameter.
bool has_suppressible_vertex(const LabeledGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.is_terminal(v) && g.degree(v) <= 2) return true;
  return false;
}

}  // namespace

CensusResult census_s1(const CensusOptions& opt) {
  CensusResult res;
  struct Candidate {
    LabeledGraph graph;
    std::string generator;
    std::string base;
  };
  std::vector<Candidate> candidates;

  for (const LabeledGraph& g : enumerate_low_separation()) {
    std::string gen =
        blocks(g).cut_vertices.empty() ? "two-separated" : "one-separated";
    candidates.push_back({g, gen, ""});
  }
  BaseCatalog cat = build_bases();
  for (size_t bi = 0; bi < cat.bases_star.size(); ++bi) {
    for (const LabeledGraph& g : enumerate_extensions(cat.bases_star[bi], opt))
      candidates.push_back({g, "extension", std::to_string(bi)});
  }
  res.candidates_generated = candidates.size();

  if (opt.shuffle_seed != 0) {
    std::mt19937 rng(opt.shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  {
    std::set<std::string> dedupe;
    std::vector<Candidate> unique;
    for (auto& c : candidates)
      if (dedupe.insert(canonical_form(c.graph).canonical_code).second)
        unique.push_back(std::move(c));
    candidates = std::move(unique);
  }
  res.candidates_after_dedupe = candidates.size();

  std::map<std::string, std::pair<size_t, size_t>> prov;
  for (const auto& c : candidates) ++prov[c.generator].first;

  std::vector<char> keep(candidates.size(), 0);
  std::atomic<size_t> value_pass{0};
  parallel_for_census(
      static_cast<int>(candidates.size()), opt.workers, [&](int i) {
        const LabeledGraph& g = candidates[i].graph;
        if (!g.is_connected()) return;
        if (has_suppressible_vertex(g)) return;
        if (is_planar(g)) return;
        GenusOptions gopt;
        gopt.cache = opt.cache;
        gopt.want_witness = false;
        gopt.genus_cap = 1;
        if (euler_genus(g.underlying(), gopt).genus != 1) return;
        gopt.genus_cap = 2;
        if (euler_genus_plus(g, gopt).genus != 2) return;
        ++value_pass;
        ClassifyOptions copt;
        copt.cache = opt.cache;
        copt.timeout_ms = opt.timeout_ms;
        copt.underlying_flags = false;
        copt.cascade_only_fast = true;
        CriticalityReport rep = classify(g, copt);
        keep[i] = rep.in_s1 ? 1 : 0;
      });
  res.survivors_value_filter = value_pass;

  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!keep[i]) continue;
    CensusEntry entry;
    entry.graph = candidates[i].graph;
    entry.generator = candidates[i].generator;
    entry.base = candidates[i].base;
    entry.code_hex = code_hex(canonical_form(entry.graph));
    res.members.push_back(std::move(entry));
    ++prov[candidates[i].generator].second;
  }
  std::sort(res.members.begin(), res.members.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.code_hex < b.code_hex;
            });
  for (auto& [k, v] : prov) res.provenance.emplace_back(k, v);
  return res;
}

std::vector<LabeledGraph> census_c0_plus(int max_n, const CensusOptions& opt) {
  std::vector<LabeledGraph> out;
  std::set<std::string> seen;
  GenusOptions gopt;
  gopt.cache = opt.cache;
  gopt.want_witness = false;
  gopt.genus_cap = 1;
  for (int n = 2; n <= std::min(max_n, 10); ++n) {
    int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      // Nonplanarity of the augmented graph needs at least eight edges.
      if (__builtin_popcountll(mask) < 8) continue;
      LabeledGraph g(n);
      for (int b = 0; b < pairs; ++b)
        if ((mask >> b) & 1) g.add_edge(all[b].u, all[b].v);
      if (!g.is_connected()) continue;
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (g.has_edge(x, y)) continue;
          LabeledGraph t = g;
          t.set_terminals(x, y);
          LabeledGraph plus = augment(t);
          if (is_planar(plus)) continue;
          // At this level, criticality is planarity of every child.
          bool critical = true;
          for (const MinorOp& op : minor_ops(t)) {
            LabeledGraph child = apply_minor_op(t, op);
            if (!is_planar(augment(child))) {
              critical = false;
              break;
            }
          }
          if (!critical) continue;
          if (euler_genus(plus, gopt).genus != 1) continue;
          if (seen.insert(canonical_form(t).canonical_code).second)
            out.push_back(t);
        }
      }
    }
  }
  return out;
}

}  // namespace cascade
