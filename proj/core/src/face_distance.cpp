#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "cascade/canonical.hpp"
#include "cascade/genus.hpp"
#include "cascade/planarity.hpp"
#include "cascade/structure.hpp"

namespace cascade {

namespace {

// Face structure of an all-positive planar embedding: faces as dart orbits,
// plus the face on the far side of every rotation gap.
struct PositiveFaces {
  int count = 0;
  std::vector<VertexSet> incident;          // vertex set per face
  std::vector<std::vector<Dart>> walks;     // dart walk per face
  std::vector<std::vector<int>> gap_face;   // gap_face[v][i]: face after rot[v][i]
};

PositiveFaces positive_faces(const LabeledGraph& g, const Embedding& emb) {
  int n = g.vertex_count();
  PositiveFaces out;
  out.gap_face.assign(n, {});
  for (int v = 0; v < n; ++v)
    out.gap_face[v].assign(emb.rotation[v].size(), -1);
  std::vector<std::vector<int>> pos(n);
  for (int v = 0; v < n; ++v) {
    pos[v].assign(n, -1);
    for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i)
      pos[v][emb.rotation[v][i]] = i;
  }
  std::vector<char> done(n * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v0 : g.neighbor_list(u)) {
      if (done[u * n + v0]) continue;
      int id = out.count++;
      out.incident.push_back(0);
      out.walks.emplace_back();
      int a = u, b = v0;
      do {
        done[a * n + b] = 1;
        out.incident[id] |= vbit(a) | vbit(b);
        out.walks[id].emplace_back(a, b);
        int i = pos[b][a];
        int d = static_cast<int>(emb.rotation[b].size());
        out.gap_face[b][i] = id;
        int c = emb.rotation[b][(i + 1) % d];
        a = b;
        b = c;
      } while (!(a == u && b == v0));
    }
  }
  return out;
}

// Alternating vertex/face breadth-first search; returns the face-distance
// parameter (faces used minus one) and fills the chain.
int face_dist_bfs(const PositiveFaces& pf, int n, int a, int b,
                  std::vector<int>* chain_vertices,
                  std::vector<int>* chain_faces) {
  std::vector<int> vdist(n, -1), vpar_face(n, -1);
  std::vector<int> fdist(pf.count, -1), fpar_vert(pf.count, -1);
  vdist[a] = 0;
  std::vector<int> vq{a};
  int level = 0;
  while (vdist[b] < 0 && !vq.empty()) {
    std::vector<int> fq;
    for (int v : vq)
      for (int f = 0; f < pf.count; ++f)
        if ((pf.incident[f] & vbit(v)) && fdist[f] < 0) {
          fdist[f] = level;
          fpar_vert[f] = v;
          fq.push_back(f);
        }
    vq.clear();
    for (int f : fq) {
      VertexSet inc = pf.incident[f];
      while (inc) {
        int v = lowest_vertex(inc);
        inc &= inc - 1;
        if (vdist[v] < 0) {
          vdist[v] = level + 1;
          vpar_face[v] = f;
          vq.push_back(v);
        }
      }
    }
    ++level;
  }
  if (vdist[b] < 0) return -1;
  if (chain_vertices && chain_faces) {
    chain_vertices->clear();
    chain_faces->clear();
    int v = b;
    while (v != a) {
      chain_vertices->push_back(v);
      int f = vpar_face[v];
      chain_faces->push_back(f);
      v = fpar_vert[f];
    }
    chain_vertices->push_back(a);
    std::reverse(chain_vertices->begin(), chain_vertices->end());
    std::reverse(chain_faces->begin(), chain_faces->end());
  }
  return vdist[b] - 1;
}

bool all_positive(const Embedding& emb) {
  for (VertexSet m : emb.negative)
    if (m) return false;
  return true;
}

std::mutex memo_mu;
std::map<std::string, int> block_memo;

// Minimum face-distance between a and b over planar embeddings of one
// 2-connected block (or trivial block). Positive-signature embeddings
// suffice: every planar embedding class has one.
int block_face_distance(const LabeledGraph& block, int a, int b,
                        Embedding* arg_best) {
  LabeledGraph keyed = block;
  keyed.clear_terminals();
  keyed.set_terminals(a, b);
  std::string key = canonical_form(keyed).canonical_code;
  if (!arg_best) {
    std::lock_guard lock(memo_mu);
    auto it = block_memo.find(key);
    if (it != block_memo.end()) return it->second;
  }
  int best = -1;
  Embedding best_emb;
  enumerate_embeddings(block, 0, [&](const Embedding& emb, int) {
    if (!all_positive(emb)) return true;
    PositiveFaces pf = positive_faces(block, emb);
    int d = face_dist_bfs(pf, block.vertex_count(), a, b, nullptr, nullptr);
    if (d >= 0 && (best < 0 || d < best)) {
      best = d;
      best_emb = emb;
    }
    return best != 0;  // stop at the optimum
  });
  if (best < 0) throw std::logic_error("face distance: no embedding found");
  if (arg_best) *arg_best = best_emb;
  std::lock_guard lock(memo_mu);
  block_memo.emplace(key, best);
  return best;
}

struct PathStep {
  std::vector<int> verts;  // block vertices, ascending (induced labeling)
  int entry, exit;         // original labels
};

// Blocks along the block-cut path from x to y, in order.
std::vector<PathStep> block_path(const LabeledGraph& g, int x, int y) {
  BlockDecomposition bd = blocks(g);
  int nb = static_cast<int>(bd.blocks.size());
  std::vector<VertexSet> bset(nb, 0);
  for (int i = 0; i < nb; ++i)
    for (int v : bd.blocks[i]) bset[i] |= vbit(v);
  // Bipartite BFS over (block, vertex) incidences.
  int n = g.vertex_count();
  std::vector<int> vpar(n, -2), bpar(nb, -2);  // parent block / parent vertex
  std::vector<int> vq{x};
  vpar[x] = -1;
  int target_block = -1;
  while (target_block < 0 && !vq.empty()) {
    std::vector<int> bq;
    for (int v : vq)
      for (int i = 0; i < nb; ++i)
        if ((bset[i] & vbit(v)) && bpar[i] == -2) {
          bpar[i] = v;
          bq.push_back(i);
          if (bset[i] & vbit(y)) {
            target_block = i;
            break;
          }
        }
    if (target_block >= 0) break;
    vq.clear();
    for (int i : bq) {
      VertexSet inc = bset[i];
      while (inc) {
        int v = lowest_vertex(inc);
        inc &= inc - 1;
        if (vpar[v] == -2) {
          vpar[v] = i;
          vq.push_back(v);
        }
      }
    }
  }
  if (target_block < 0)
    throw DisconnectedGraphError("face_distance: terminals not connected");
  std::vector<PathStep> path;
  int blk = target_block, exit_v = y;
  while (blk >= 0) {
    PathStep step;
    step.verts = bd.blocks[blk];
    step.exit = exit_v;
    step.entry = bpar[blk];
    path.push_back(step);
    exit_v = bpar[blk];
    blk = exit_v >= 0 ? vpar[exit_v] : -1;
  }
  path.back().entry = x;
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FaceDistanceResult face_distance(const LabeledGraph& g, int x, int y) {
  if (x == y) throw GraphError("face_distance: identical vertices");
  if (!g.is_connected())
    throw DisconnectedGraphError("face_distance: graph must be connected");
  if (!is_planar(g)) throw NonplanarInputError("face_distance: nonplanar");

  std::vector<PathStep> path = block_path(g, x, y);

  // Distance: sum of per-block minima along the path.
  int total = 0;
  std::vector<LabeledGraph> path_graphs;
  std::vector<std::vector<int>> path_maps;
  std::vector<Embedding> path_embs;
  std::vector<std::pair<int, int>> path_ends;  // local entry/exit
  for (const PathStep& step : path) {
    VertexSet keep = 0;
    for (int v : step.verts) keep |= vbit(v);
    LabeledGraph bg = g.induced_subgraph(keep).underlying();
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < step.verts.size(); ++i)
      local[step.verts[i]] = static_cast<int>(i);
    int a = local[step.entry], b = local[step.exit];
    Embedding arg;
    int d = block_face_distance(bg, a, b, &arg);
    total += d;
    path_graphs.push_back(std::move(bg));
    path_maps.push_back(step.verts);
    path_embs.push_back(std::move(arg));
    path_ends.emplace_back(a, b);
  }

  // Witness: splice the blocks together, merging chain-end faces at the
  // junction cut vertices, then hang every remaining block anywhere.
  int n = g.vertex_count();
  Embedding combined(n);
  std::vector<char> vertex_done(n, 0);

  auto splice_block = [&](const LabeledGraph& bg, const std::vector<int>& vmap,
                          const Embedding& emb, int junction_local,
                          int parent_gap_pos, int child_gap_pos) {
    // junction_local < 0: no junction, copy rotations wholesale.
    for (int v = 0; v < bg.vertex_count(); ++v) {
      int gv = vmap[v];
      std::vector<int> mapped;
      for (int u : emb.rotation[v]) mapped.push_back(vmap[u]);
      if (v == junction_local) {
        std::vector<int> rotated;
        int d = static_cast<int>(mapped.size());
        for (int i = 0; i < d; ++i)
          rotated.push_back(mapped[(child_gap_pos + 1 + i) % d]);
        auto& dst = combined.rotation[gv];
        dst.insert(dst.begin() + parent_gap_pos + 1, rotated.begin(),
                   rotated.end());
      } else {
        combined.rotation[gv] = mapped;
      }
    }
  };

  // Path blocks first, chaining the junction faces.
  int prev_exit_face_gap = -1;  // gap position at the junction in `combined`
  for (size_t i = 0; i < path.size(); ++i) {
    const LabeledGraph& bg = path_graphs[i];
    const Embedding& emb = path_embs[i];
    auto [a, b] = path_ends[i];
    PositiveFaces pf = positive_faces(bg, emb);
    std::vector<int> cv, cf;
    int d = face_dist_bfs(pf, bg.vertex_count(), a, b, &cv, &cf);
    if (d < 0) throw std::logic_error("face_distance: witness lost the chain");
    if (i == 0) {
      splice_block(bg, path_maps[i], emb, -1, -1, -1);
    } else {
      // Child-side gap: a gap of the entry vertex on the chain's first face.
      int first_face = cf.front();
      int child_gap = -1;
      for (int gi = 0;
           gi < static_cast<int>(pf.gap_face[a].size()) && child_gap < 0; ++gi)
        if (pf.gap_face[a][gi] == first_face) child_gap = gi;
      if (child_gap < 0)
        throw std::logic_error("face_distance: chain face misses the junction");
      splice_block(bg, path_maps[i], emb, a, prev_exit_face_gap, child_gap);
    }
    if (i + 1 < path.size()) {
      // Parent-side gap for the next junction: on the chain's last face.
      int last_face = cf.back();
      int parent_gap = -1;
      for (int gi = 0;
           gi < static_cast<int>(pf.gap_face[b].size()) && parent_gap < 0; ++gi)
        if (pf.gap_face[b][gi] == last_face) parent_gap = gi;
      if (parent_gap < 0)
        throw std::logic_error("face_distance: chain face misses the junction");
      // Position in the combined rotation equals the block-local position
      // because the junction vertex is untouched until the next splice.
      prev_exit_face_gap = parent_gap;
    }
    for (int v : path_maps[i]) vertex_done[v] = 1;
  }

  // Hang every block not on the path at its articulation vertex.
  BlockDecomposition bd = blocks(g);
  std::vector<char> block_used(bd.blocks.size(), 0);
  for (size_t i = 0; i < bd.blocks.size(); ++i)
    for (const auto& step : path)
      if (bd.blocks[i] == step.verts) block_used[i] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < bd.blocks.size(); ++i) {
      if (block_used[i]) continue;
      int join = -1;
      for (int v : bd.blocks[i])
        if (vertex_done[v]) join = v;
      if (join < 0) continue;
      block_used[i] = 1;
      progress = true;
      VertexSet keep = 0;
      for (int v : bd.blocks[i]) keep |= vbit(v);
      LabeledGraph bg = g.induced_subgraph(keep).underlying();
      std::vector<int> local(n, -1);
      for (size_t k = 0; k < bd.blocks[i].size(); ++k)
        local[bd.blocks[i][k]] = static_cast<int>(k);
      auto emb = planar_embedding(bg);
      if (!emb) throw std::logic_error("face_distance: block not planar");
      int parent_gap =
          std::max<int>(0, static_cast<int>(combined.rotation[join].size()) - 1);
      splice_block(bg, bd.blocks[i], *emb, local[join], parent_gap, 0);
      for (int v : bd.blocks[i]) vertex_done[v] = 1;
    }
  }

  FaceDistanceResult out;
  out.witness_embedding = combined;
  PositiveFaces pf = positive_faces(g, combined);
  int final_d =
      face_dist_bfs(pf, n, x, y, &out.chain_vertices, &out.chain_faces);
  if (final_d != total)
    throw std::logic_error("face_distance: assembled witness misses the bound");
  out.distance = total;
  out.witness_faces.faces = pf.walks;  // chain indices refer to these
  return out;
}

}  // namespace cascade
