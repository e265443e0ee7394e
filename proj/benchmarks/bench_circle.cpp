#include <benchmark/benchmark.h>

#include <random>

#include "romdom/circle.hpp"
#include "romdom/experiments.hpp"
#include "romdom/graphing.hpp"

namespace {

using namespace romdom;

std::vector<CircleSet> sets(std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<CircleSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(experiments::random_circle_set(rng, AlphaSpec::golden()));
  }
  return out;
}

void BM_Unite(benchmark::State& state) {
  const auto s = sets(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unite(s[i % 64], s[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Unite);

void BM_Intersect(benchmark::State& state) {
  const auto s = sets(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(s[i % 64], s[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Intersect);

void BM_Neighborhood(benchmark::State& state) {
  const auto s = sets(64);
  const RotationGraphing g = RotationGraphing::irrational_cycle(AlphaSpec::golden());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_set(g, s[i++ % 64]));
}
BENCHMARK(BM_Neighborhood);

void BM_CertifiedSignNearZero(benchmark::State& state) {
  // F_{n-1} - F_n alpha is tiny, forcing the MPFR path.
  const AlphaSpec a = AlphaSpec::golden();
  const mpq_class r(mpz_class("1134903170"));
  const mpq_class c(mpz_class("-1836311903"));
  for (auto _ : state) benchmark::DoNotOptimize(a.sign(r, c));
}
BENCHMARK(BM_CertifiedSignNearZero);

}  // namespace
