// Planarity is delegated to Boost's Boyer-Myrvold implementation; everything
// downstream only sees the LabeledGraph-based wrappers.
#include "cascade/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace cascade {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const LabeledGraph& g) {
  BoostGraph bg(g.vertex_count());
  int idx = 0;
  for (const Edge& e : g.edges())
    boost::add_edge(e.u, e.v, boost::property<boost::edge_index_t, int>(idx++),
                    bg);
  return bg;
}

}  // namespace

bool is_planar(const LabeledGraph& g) {
  // Below the smallest Kuratowski graph there is nothing to test, and above
  // the planar density bound nothing to search for.
  if (g.vertex_count() < 5 || g.edge_count() < 9) return true;
  if (g.edge_count() > 3 * g.vertex_count() - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg);
}

std::optional<Embedding> planar_embedding(const LabeledGraph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>
      storage(boost::num_vertices(bg));
  auto emb_map = boost::make_iterator_property_map(
      storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = bg,
          boost::boyer_myrvold_params::embedding = emb_map))
    return std::nullopt;
  Embedding emb(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& e : storage[v]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      emb.rotation[v].push_back(a == v ? b : a);
    }
  return emb;
}

std::optional<LabeledGraph> find_kuratowski(const LabeledGraph& g) {
  if (is_planar(g)) return std::nullopt;
  // Strip edges greedily while the remainder stays nonplanar; what is left is
  // an edge-minimal nonplanar subgraph, i.e. a Kuratowski subdivision.
  LabeledGraph h = g;
  for (const Edge& e : g.edges()) {
    LabeledGraph trial = h;
    trial.remove_edge(e.u, e.v);
    if (!is_planar(trial)) h = trial;
  }
  h.clear_terminals();
  return h;
}

bool kuratowski_is_k5(const LabeledGraph& subdivision) {
  int deg3 = 0, deg4 = 0;
  for (int v = 0; v < subdivision.vertex_count(); ++v) {
    int d = subdivision.degree(v);
    if (d == 3) ++deg3;
    if (d == 4) ++deg4;
  }
  return deg4 == 5 && deg3 == 0;
}

}  // namespace cascade
