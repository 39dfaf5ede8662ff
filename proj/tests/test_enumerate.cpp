#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cascade/canonical.hpp"
#include "cascade/enumerate.hpp"
#include "cascade/genus.hpp"
#include "cascade/io.hpp"
#include "cascade/kgraph.hpp"
#include "cascade/linkage.hpp"
#include "cascade/minor.hpp"
#include "cascade/planarity.hpp"
#include "testutil.hpp"

using namespace cascade;
namespace tu = cascade::testutil;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream of(path);
  of << body;
  return path;
}

std::string toy_dataset(bool k5_in_front) {
  std::string g2a = to_graph6(disjoint_union(complete_graph(5), complete_graph(5)));
  std::string g2b =
      to_graph6(disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3)));
  std::string gcyl_plus = to_graph6(augment(tu::cylinder_gadget()).underlying());
  std::string body = "#E1\n";
  for (int i = 0; i < 35; ++i) {
    if (i == 0 && k5_in_front)
      body += to_graph6(complete_graph(5)) + "\n";
    else if (i == 1)
      body += gcyl_plus + "\n";
    else
      body += g2a + "\n";
  }
  body += "#E1STAR_EXTRA\n";
  for (int i = 0; i < 68; ++i) body += g2b + "\n";
  return body;
}

}  // namespace

TEST_CASE("base catalog") {
  BaseCatalog cat = build_bases();
  CHECK(cat.linkages.size() == 9);
  REQUIRE(cat.bases.size() == 5);
  REQUIRE(cat.bases_star.size() == 10);

  GenusCache cache;
  GenusOptions gopt;
  gopt.cache = &cache;
  gopt.want_witness = false;
  SUBCASE("every base is planar with augmented genus two") {
    for (const LabeledGraph& b : cat.bases_star) {
      CHECK(is_planar(b));
      CHECK(euler_genus_plus(b, gopt).genus == 2);
      CHECK(b.terminals_nonadjacent());
    }
  }
  SUBCASE("the first base is the cylinder gadget") {
    CHECK(is_isomorphic(cat.bases[0], tu::cylinder_gadget()));
  }
  SUBCASE("bases carry well-separated disjoint terminal K-graphs") {
    for (size_t i = 0; i < cat.bases.size(); ++i) {
      auto pair = disjoint_xy_k_graphs(cat.bases[i]);
      REQUIRE(pair.has_value());
      int k = separation_number(cat.bases[i], pair->first, pair->second).k;
      CHECK(k >= 3);
      if (i == 4) CHECK(k == 4);
    }
  }
  SUBCASE("split variants keep a base minor and are deletion-minimal") {
    for (size_t i = 5; i < cat.bases_star.size(); ++i) {
      const LabeledGraph& g = cat.bases_star[i];
      bool has_minor = false;
      for (const LabeledGraph& b : cat.bases)
        if (is_minor(b, g)) has_minor = true;
      CHECK(has_minor);
      // No degree-4 vertex splitting left anything non-minimal behind.
      for (const Edge& e : g.edges()) {
        LabeledGraph h = g;
        h.remove_edge(e.u, e.v);
        bool still = false;
        for (const LabeledGraph& b : cat.bases)
          if (is_minor(b, h)) still = true;
        CHECK(!still);
      }
    }
  }
}

TEST_CASE("low separation generator includes the known cascade") {
  std::vector<LabeledGraph> cands = enumerate_low_separation();
  CHECK(cands.size() >= 4);
  bool has_gadget = false;
  LabeledGraph gstar = tu::one_separated_k5_gadget();
  for (const LabeledGraph& g : cands)
    if (is_isomorphic(g, gstar)) has_gadget = true;
  CHECK(has_gadget);
}

TEST_CASE("extensions are nonplanar supergraphs of their base") {
  BaseCatalog cat = build_bases();
  CensusOptions opt;
  std::vector<LabeledGraph> ext = enumerate_extensions(cat.bases[0], opt);
  CHECK(!ext.empty());
  size_t checked = 0;
  for (const LabeledGraph& g : ext) {
    if (++checked > 25) break;
    CHECK(!is_planar(g));
    CHECK(g.terminals_nonadjacent());
    CHECK(contains_subdivision(cat.bases[0], g));
  }
}

TEST_CASE("obstruction dataset loading") {
  SUBCASE("well-formed toy file loads") {
    std::string path = write_temp("toy_ok.g6", toy_dataset(false));
    ObstructionDataset ds = load_obstructions(path);
    CHECK(ds.e1.size() == 35);
    CHECK(ds.e1_star_extra.size() == 68);
    std::remove(path.c_str());
  }
  SUBCASE("count mismatch is rejected") {
    std::string body = "#E1\n";
    for (int i = 0; i < 34; ++i)
      body += to_graph6(disjoint_union(complete_graph(5), complete_graph(5))) + "\n";
    body += "#E1STAR_EXTRA\n";
    std::string path = write_temp("toy_short.g6", body);
    CHECK_THROWS_AS(load_obstructions(path), DatasetError);
    std::remove(path.c_str());
  }
  SUBCASE("a projective-planar entry fails validation") {
    std::string path = write_temp("toy_k5.g6", toy_dataset(true));
    CHECK_THROWS_AS(load_obstructions(path), DatasetError);
    std::remove(path.c_str());
  }
}

TEST_CASE("planar critical derivation on toy data") {
  // The toy list plants one genus-two member whose terminal-edge removal is
  // planar and plus-critical: the augmented cylinder gadget.
  std::string path = write_temp("toy_derive.g6", toy_dataset(false));
  ObstructionDataset ds = load_obstructions(path);
  std::remove(path.c_str());
  GenusCache cache;
  std::vector<LabeledGraph> got = derive_planar_c1plus(ds, &cache);
  bool has_cyl = false;
  for (const LabeledGraph& g : got)
    if (is_isomorphic(g, tu::cylinder_gadget())) has_cyl = true;
  CHECK(has_cyl);
  for (const LabeledGraph& g : got) {
    CHECK(is_planar(g));
    CHECK(g.terminals_nonadjacent());
  }
}

TEST_CASE("small exhaustive catalog of plus-critical graphs") {
  // Up to five vertices only one graph qualifies: the complete graph on
  // five vertices missing its terminal edge.
  CensusOptions opt;
  GenusCache cache;
  opt.cache = &cache;
  std::vector<LabeledGraph> got = census_c0_plus(5, opt);
  REQUIRE(got.size() == 1);
  LabeledGraph expect = complete_graph(5);
  expect.remove_edge(0, 1);
  expect.set_terminals(0, 1);
  CHECK(is_isomorphic(got[0], expect));
}
