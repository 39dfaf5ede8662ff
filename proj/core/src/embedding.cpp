#include "cascade/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace cascade {

bool embedding_well_formed(const LabeledGraph& g, const Embedding& emb) {
  if (emb.vertex_count() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> r = emb.rotation[v];
    std::sort(r.begin(), r.end());
    std::vector<int> nb = g.neighbor_list(v);
    if (r != nb) return false;
    if (emb.negative[v] & ~g.neighbors(v)) return false;
    for (int u : nb)
      if (emb.edge_negative(v, u) != emb.edge_negative(u, v)) return false;
  }
  return true;
}

namespace {

// Face tracing works on states (dart, side). Crossing a negative edge flips
// the side; on side 0 the walk leaves along the rotation successor of the
// arrival edge, on side 1 along the predecessor. Orbits of this successor
// come in mirror pairs ((u->v), s) <-> ((v->u), !s); each pair is one face.
struct Tracer {
  const LabeledGraph& g;
  const Embedding& emb;
  int n;
  std::vector<std::vector<int>> pos;  // pos[v][u] = index of u in rotation[v]

  Tracer(const LabeledGraph& gg, const Embedding& ee)
      : g(gg), emb(ee), n(gg.vertex_count()) {
    pos.assign(n, {});
    for (int v = 0; v < n; ++v) {
      pos[v].assign(n, -1);
      const auto& rot = emb.rotation[v];
      for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        pos[v][rot[i]] = i;
    }
  }

  int state_id(int u, int v, int s) const { return ((u * n + v) << 1) | s; }

  std::tuple<int, int, int> next(int u, int v, int s) const {
    int s2 = s ^ (emb.edge_negative(u, v) ? 1 : 0);
    const auto& rot = emb.rotation[v];
    int d = static_cast<int>(rot.size());
    int i = pos[v][u];
    int w = s2 == 0 ? rot[(i + 1) % d] : rot[(i + d - 1) % d];
    return {v, w, s2};
  }
};

}  // namespace

FaceSet trace_faces(const LabeledGraph& g, const Embedding& emb) {
  if (!g.is_connected())
    throw DisconnectedGraphError("trace_faces: graph must be connected");
  int n = g.vertex_count();
  FaceSet out;
  if (g.edge_count() == 0) {
    // A lone vertex spans one face.
    if (n == 1) out.faces.push_back({});
    return out;
  }
  Tracer tr(g, emb);
  std::vector<int> orbit(2 * n * n, -1);
  std::vector<std::vector<Dart>> walks;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbor_list(u)) {
      for (int s = 0; s < 2; ++s) {
        if (orbit[tr.state_id(u, v, s)] >= 0) continue;
        int id = static_cast<int>(walks.size());
        std::vector<Dart> walk;
        int a = u, b = v, side = s;
        do {
          orbit[tr.state_id(a, b, side)] = id;
          walk.emplace_back(a, b);
          std::tie(a, b, side) = tr.next(a, b, side);
        } while (!(a == u && b == v && side == s));
        walks.push_back(std::move(walk));
      }
    }
  }
  // Keep one orbit per mirror pair: the mirror of (a->b, s) is
  // (b->a, !s xor neg(ab)).
  std::vector<char> keep(walks.size(), 0);
  for (size_t i = 0; i < walks.size(); ++i) {
    auto [a, b] = walks[i].front();
    int s = orbit[tr.state_id(a, b, 0)] == static_cast<int>(i) ? 0 : 1;
    int ms = s ^ 1 ^ (emb.edge_negative(a, b) ? 1 : 0);
    int mirror = orbit[tr.state_id(b, a, ms)];
    if (mirror == static_cast<int>(i))
      throw std::logic_error("trace_faces: self-mirror facial walk");
    if (static_cast<int>(i) < mirror) keep[i] = 1;
  }
  for (size_t i = 0; i < walks.size(); ++i)
    if (keep[i]) out.faces.push_back(std::move(walks[i]));
  return out;
}

int euler_genus_of_embedding(const LabeledGraph& g, const Embedding& emb) {
  FaceSet fs = trace_faces(g, emb);
  int genus = 2 - g.vertex_count() + g.edge_count() - fs.count();
  if (genus < 0)
    throw std::logic_error("euler_genus_of_embedding: negative genus");
  return genus;
}

Embedding default_embedding(const LabeledGraph& g) {
  Embedding emb(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    emb.rotation[v] = g.neighbor_list(v);
  return emb;
}

}  // namespace cascade
