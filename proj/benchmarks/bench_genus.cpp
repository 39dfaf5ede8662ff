#include <benchmark/benchmark.h>

#include <random>

#include "cascade/canonical.hpp"
#include "cascade/criticality.hpp"
#include "cascade/genus.hpp"
#include "cascade/planarity.hpp"

using namespace cascade;

namespace {

LabeledGraph one_separated_gadget() {
  LabeledGraph g(9);
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) g.add_edge(i, j);
  for (int i = 1; i <= 3; ++i) g.add_edge(4, i);
  for (int i = 4; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) g.add_edge(i, j);
  g.set_terminals(0, 8);
  return g;
}

void BM_EulerGenusComplete(benchmark::State& state) {
  LabeledGraph g = complete_graph(static_cast<int>(state.range(0)));
  GenusOptions opt;
  opt.want_witness = false;
  for (auto _ : state) {
    GenusResult r = euler_genus(g, opt);
    benchmark::DoNotOptimize(r.genus);
  }
}
BENCHMARK(BM_EulerGenusComplete)->DenseRange(5, 8);

void BM_ProjectivePlanarityDecision(benchmark::State& state) {
  // Deciding genus <= 1 for a genus-2 graph exhausts the whole search tree.
  LabeledGraph g = augment(one_separated_gadget());
  for (auto _ : state) {
    auto emb = genus_at_most(g, 1);
    benchmark::DoNotOptimize(emb.has_value());
  }
}
BENCHMARK(BM_ProjectivePlanarityDecision);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937 rng(7);
  LabeledGraph g(12);
  std::bernoulli_distribution coin(0.35);
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (coin(rng)) g.add_edge(i, j);
  g.set_terminals(0, 11);
  for (auto _ : state) {
    CanonicalForm cf = canonical_form(g);
    benchmark::DoNotOptimize(cf.canonical_code.size());
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_Planarity(benchmark::State& state) {
  LabeledGraph g = complete_bipartite(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_Planarity);

void BM_Classify(benchmark::State& state) {
  LabeledGraph g = one_separated_gadget();
  GenusCache cache;
  ClassifyOptions opt;
  opt.cache = &cache;
  for (auto _ : state) {
    CriticalityReport rep = classify(g, opt);
    benchmark::DoNotOptimize(rep.in_s1);
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
