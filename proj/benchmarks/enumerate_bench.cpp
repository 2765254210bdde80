#include <benchmark/benchmark.h>

#include "edgeideal/digraph.hpp"
#include "edgeideal/enumerate.hpp"

using namespace edgeideal;

static void BM_Bipartite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_bipartite_up_to(n).size();
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_Bipartite)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_PerfectlyMatched(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_perfectly_matched(c).size();
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_PerfectlyMatched)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Posets(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_natural_poset(c, [&](const std::vector<VertexMask>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Posets)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Antichains(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  // empty digraph: every subset is an antichain
  const Digraph d = Digraph::from_arcs(c, {});
  for (auto _ : state) benchmark::DoNotOptimize(count_antichains(d));
}
BENCHMARK(BM_Antichains)->RangeMultiplier(2)->Range(4, 16);

BENCHMARK_MAIN();
