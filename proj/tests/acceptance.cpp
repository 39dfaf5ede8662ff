// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 7 is reported as skipped when the obstruction dataset
// is not present.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>

#include "cascade/canonical.hpp"
#include "cascade/criticality.hpp"
#include "cascade/enumerate.hpp"
#include "cascade/genus.hpp"
#include "cascade/kgraph.hpp"
#include "cascade/minor.hpp"
#include "cascade/planarity.hpp"
#include "cascade/structure.hpp"
#include "testutil.hpp"

using namespace cascade;
namespace tu = cascade::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void report_skip(int criterion, const std::string& detail) {
  std::printf("[SKIP] criterion %d: %s\n", criterion, detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

GenusCache shared_cache;

// 1. Exact genus of the classical graphs, each within budget, each value
// closed independently: a sound lower bound meets a re-traced witness.
void criterion1() {
  struct Row {
    int n, expected, independent_bound;
  };
  // Density bound arithmetic: ceil(2 - n + m - 2m/3); bipartite for K3,3.
  const Row rows[] = {{4, 0, 0}, {5, 1, 1}, {6, 1, 1}, {7, 2, 2}};
  bool ok = true;
  std::string detail;
  for (const Row& r : rows) {
    LabeledGraph g = complete_graph(r.n);
    auto t0 = Clock::now();
    GenusOptions opt;
    opt.cache = &shared_cache;
    GenusResult res = euler_genus(g, opt);
    double el = seconds_since(t0);
    bool good = res.genus == r.expected && el < 10.0;
    if (r.n >= 5) {
      // Lower bound from face-length density, computed right here.
      int m = g.edge_count();
      int density = (3 * (2 - r.n + m) - 2 * m + 2) / 3;
      good = good && density <= res.genus;
      good = good && res.witness.has_value() &&
             euler_genus_of_embedding(g, *res.witness) == res.genus;
    }
    ok = ok && good;
    detail += "K" + std::to_string(r.n) + "=" + std::to_string(res.genus) + " ";
  }
  {
    LabeledGraph g = complete_bipartite(3, 3);
    auto t0 = Clock::now();
    GenusOptions opt;
    opt.cache = &shared_cache;
    GenusResult res = euler_genus(g, opt);
    // Bipartite density: ceil(2 - 6 + 9 - 9/2) = 1.
    ok = ok && res.genus == 1 && seconds_since(t0) < 10.0 &&
         euler_genus_of_embedding(g, *res.witness) == 1;
    detail += "K3,3=" + std::to_string(res.genus);
  }
  report(1, ok, "classical genus values (" + detail + ")");
}

// 2. Block additivity on 200 random graphs.
void criterion2() {
  std::mt19937 rng(20240201);
  GenusOptions split, direct;
  split.cache = &shared_cache;
  split.want_witness = false;
  direct = split;
  direct.use_blocks = false;
  int bad = 0;
  auto t0 = Clock::now();
  for (int it = 0; it < 200; ++it) {
    LabeledGraph g;
    if (it % 2 == 0) {
      // Blocky composite: a chain of small dense pieces glued at vertices.
      int parts = 2 + static_cast<int>(rng() % 2);
      g = tu::random_connected_graph(rng, 4, 0.7);
      for (int p = 1; p < parts && g.vertex_count() <= 6; ++p) {
        LabeledGraph blk = tu::random_connected_graph(rng, 4, 0.7);
        int cut = static_cast<int>(rng() % g.vertex_count());
        int off = g.vertex_count();
        LabeledGraph merged(off + blk.vertex_count() - 1);
        for (const Edge& e : g.edges()) merged.add_edge(e.u, e.v);
        auto map = [&](int v) { return v == 0 ? cut : off + v - 1; };
        for (const Edge& e : blk.edges()) merged.add_edge(map(e.u), map(e.v));
        g = merged;
      }
    } else {
      int n = 6 + static_cast<int>(rng() % 5);
      g = tu::random_connected_graph(rng, n, 0.3);
    }
    if (euler_genus(g, split).genus != euler_genus(g, direct).genus) ++bad;
  }
  double el = seconds_since(t0);
  report(2, bad == 0 && el < 300.0,
         "block additivity on 200 graphs, mismatches=" + std::to_string(bad) +
             ", " + std::to_string(el) + "s");
}

// 3. Disjoint separating cycles equal the face distance.
void criterion3() {
  std::mt19937 rng(20240301);
  int bad = 0, done = 0;
  while (done < 100) {
    int n = 6 + static_cast<int>(rng() % 5);
    LabeledGraph g = tu::random_connected_planar(rng, n, 2 + rng() % 5);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int x = pick(rng), y = pick(rng);
    if (x == y) continue;
    ++done;
    if (max_disjoint_separating_cycles(g, x, y) !=
        face_distance(g, x, y).distance)
      ++bad;
  }
  report(3, bad == 0,
         "separating cycles vs face distance on 100 planar graphs, "
         "mismatches=" + std::to_string(bad));
}

// 4. Augmented genus equals the capped face distance on planar inputs.
void criterion4() {
  std::mt19937 rng(20240401);
  GenusOptions opt;
  opt.cache = &shared_cache;
  opt.want_witness = false;
  int bad = 0, done = 0;
  while (done < 200) {
    int n = 6 + static_cast<int>(rng() % 5);
    LabeledGraph g = tu::random_connected_planar(rng, n, 2 + rng() % 5);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int x = pick(rng), y = pick(rng);
    if (x == y || g.has_edge(x, y)) continue;
    g.set_terminals(x, y);
    ++done;
    int dstar = face_distance(g, x, y).distance;
    if (euler_genus_plus(g, opt).genus != std::min(dstar, 2)) ++bad;
  }
  report(4, bad == 0,
         "augmented genus = min(face distance, 2) on 200 planar graphs, "
         "mismatches=" + std::to_string(bad));
}

// 5. Deleting the opposite edge of a degree-3 triangle vertex keeps genus.
void criterion5() {
  std::mt19937 rng(20240501);
  GenusOptions opt;
  opt.cache = &shared_cache;
  opt.want_witness = false;
  int bad = 0, done = 0;
  while (done < 100) {
    int n = 5 + static_cast<int>(rng() % 4);
    LabeledGraph base = tu::random_connected_graph(rng, n, 0.4);
    std::vector<Edge> es = base.edges();
    if (es.empty()) continue;
    Edge vw = es[rng() % es.size()];
    // Plant u adjacent to exactly v, w, and one more vertex.
    LabeledGraph g(n + 1);
    for (const Edge& e : es) g.add_edge(e.u, e.v);
    int u = n;
    g.add_edge(u, vw.u);
    g.add_edge(u, vw.v);
    int z = static_cast<int>(rng() % n);
    if (z == vw.u || z == vw.v) z = (z + 1) % n;
    if (z == vw.u || z == vw.v) z = (z + 1) % n;
    g.add_edge(u, z);
    if (g.degree(u) != 3) continue;
    ++done;
    LabeledGraph h = delete_edge(g, vw);
    if (euler_genus(g, opt).genus != euler_genus(h, opt).genus) ++bad;
  }
  report(5, bad == 0,
         "degree-3 triangle edge deletion keeps genus on 100 graphs, "
         "mismatches=" + std::to_string(bad));
}

// 6. Exhaustive catalog of plus-critical terminal graphs at value one.
std::set<std::string> c0_codes;
void criterion6() {
  auto t0 = Clock::now();
  CensusOptions opt;
  opt.cache = &shared_cache;
  std::vector<LabeledGraph> got = census_c0_plus(6, opt);
  double el = seconds_since(t0);
  for (const LabeledGraph& g : got)
    c0_codes.insert(code_hex(canonical_form(g)));

  LabeledGraph k5e = complete_graph(5);
  k5e.remove_edge(0, 1);
  k5e.set_terminals(0, 1);
  LabeledGraph k33e = complete_bipartite(3, 3);
  k33e.remove_edge(0, 3);
  k33e.set_terminals(0, 3);
  LabeledGraph k33s = complete_bipartite(3, 3);
  k33s.set_terminals(0, 1);
  bool members_right = got.size() == 3;
  for (const LabeledGraph& expect : {k5e, k33e, k33s}) {
    bool found = false;
    for (const LabeledGraph& g : got)
      if (is_isomorphic(g, expect)) found = true;
    members_right = members_right && found;
  }
  report(6, members_right && el < 1800.0,
         "exhaustive catalog up to 6 vertices has exactly the 3 expected "
         "graphs (got " + std::to_string(got.size()) + ", " +
             std::to_string(el) + "s)");
}

// 7. Planar critical derivation from the obstruction dataset.
void criterion7() {
  const char* candidates[] = {"data/projective_obstructions.g6",
                              "../data/projective_obstructions.g6"};
  std::string path;
  for (const char* c : candidates)
    if (std::filesystem::exists(c)) path = c;
  if (path.empty()) {
    report_skip(7,
                "obstruction dataset not bundled (expected at "
                "data/projective_obstructions.g6); derivation pipeline is "
                "exercised by unit tests on synthetic data");
    return;
  }
  try {
    ObstructionDataset ds = load_obstructions(path, VerifyLevel::Spot,
                                              &shared_cache);
    auto t0 = Clock::now();
    std::vector<LabeledGraph> got = derive_planar_c1plus(ds, &shared_cache);
    report(7, got.size() == 13 && seconds_since(t0) < 3600.0,
           "derived planar critical list has " + std::to_string(got.size()) +
               " graphs (expected 13)");
  } catch (const DatasetError& e) {
    report(7, false, std::string("dataset validation failed: ") + e.what());
  }
}

// 8. The cascade census: 21 members, every one re-verified, antichain.
std::set<std::string> census_codes;
void criterion8() {
  auto t0 = Clock::now();
  CensusOptions opt;
  opt.cache = &shared_cache;
  opt.workers = 2;
  CensusResult res = census_s1(opt);
  double el = seconds_since(t0);

  bool count_ok = res.members.size() == 21;
  bool reverified = true, antichain = true;
  bool one_sep_found = false;
  int one_sep = 0;
  for (const CensusEntry& m : res.members) {
    census_codes.insert(m.code_hex);
    if (m.generator == "one-separated") {
      one_sep_found = true;
      ++one_sep;
    }
    ClassifyOptions copt;
    copt.cache = &shared_cache;
    CriticalityReport rep = classify(m.graph, copt);
    if (!rep.in_s1 || rep.genus != 1 || rep.genus_plus != 2) reverified = false;
    if (!m.graph.terminals_nonadjacent()) reverified = false;
    if (!disjoint_xy_k_graphs(m.graph).has_value()) reverified = false;
  }
  for (size_t i = 0; i < res.members.size() && antichain; ++i)
    for (size_t j = 0; j < res.members.size() && antichain; ++j)
      if (i != j && is_minor(res.members[i].graph, res.members[j].graph))
        antichain = false;

  std::string prov = "provenance:";
  for (auto& [gen, counts] : res.provenance)
    prov += " " + gen + "=" + std::to_string(counts.second) + "/" +
            std::to_string(counts.first);
  bool ok = count_ok && reverified && antichain && one_sep_found && el < 3600.0;
  report(8, ok,
         "census has " + std::to_string(res.members.size()) +
             " members (expected 21), re-verified=" +
             (reverified ? "yes" : "NO") + ", antichain=" +
             (antichain ? "yes" : "NO") + ", " + prov + ", " +
             std::to_string(el) + "s");
  if (!count_ok)
    std::printf("        deviation debug: %s\n", prov.c_str());
}

// 9. Determinism: shuffled runs produce identical canonical-code sets.
void criterion9() {
  CensusOptions opt;
  opt.cache = &shared_cache;
  opt.workers = 2;
  opt.shuffle_seed = 987654321;
  CensusResult shuffled = census_s1(opt);
  std::set<std::string> codes2;
  for (const CensusEntry& m : shuffled.members) codes2.insert(m.code_hex);

  CensusOptions copt;
  copt.cache = &shared_cache;
  std::vector<LabeledGraph> c0_again = census_c0_plus(6, copt);
  std::set<std::string> c0_codes2;
  for (const LabeledGraph& g : c0_again)
    c0_codes2.insert(code_hex(canonical_form(g)));

  bool ok = codes2 == census_codes && c0_codes2 == c0_codes;
  report(9, ok, "shuffled reruns reproduce identical canonical-code sets");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance finished in %.1fs with %d failure(s)\n",
              seconds_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
