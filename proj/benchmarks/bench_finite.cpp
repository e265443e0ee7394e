#include <benchmark/benchmark.h>

#include "romdom/finite.hpp"

namespace {

using namespace romdom::finite;

void BM_BruteForceCycle(benchmark::State& state) {
  const FiniteGraph g = FiniteGraph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_rdn(g));
}
BENCHMARK(BM_BruteForceCycle)->DenseRange(8, 16, 4);

void BM_BruteForceComplete(benchmark::State& state) {
  const FiniteGraph g = FiniteGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_rdn(g));
}
BENCHMARK(BM_BruteForceComplete)->DenseRange(8, 16, 4);

void BM_CycleDp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycle_path_rdn(Shape::cycle, n));
}
BENCHMARK(BM_CycleDp)->RangeMultiplier(10)->Range(10, 100000);

void BM_DominationNumber(benchmark::State& state) {
  const FiniteGraph g = FiniteGraph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g));
}
BENCHMARK(BM_DominationNumber)->DenseRange(8, 16, 4);

}  // namespace
