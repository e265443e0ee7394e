#include <benchmark/benchmark.h>

#include "romdom/scheme.hpp"

namespace {

using namespace romdom;

void BM_BuildScheme(benchmark::State& state) {
  const mpq_class eps(1, state.range(0));
  const SchemeParams p = SchemeParams::with_default_depth(AlphaSpec::golden(), eps);
  for (auto _ : state) benchmark::DoNotOptimize(build_scheme(p));
  state.SetLabel("K=" + std::to_string(p.depth));
}
BENCHMARK(BM_BuildScheme)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
  const SchemeParams p{AlphaSpec::golden(), mpq_class(1, 10), 30};
  for (auto _ : state) benchmark::DoNotOptimize(scheme_social_needy_audit(p));
}
BENCHMARK(BM_Audit)->Unit(benchmark::kMillisecond);

}  // namespace
