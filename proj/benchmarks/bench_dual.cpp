#include <benchmark/benchmark.h>

#include "extremal/dualspace.hpp"
#include "extremal/polytope.hpp"

using namespace extremal;

namespace {

void BM_EnumerateCompatible(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dual::enumerate_compatible(bound));
}
BENCHMARK(BM_EnumerateCompatible)->DenseRange(4, 8, 2);

void BM_DualNormGauge(benchmark::State& state) {
  SparseVec f;
  f.set(2, Rational(1, 2));
  f.set(3, Rational(-3, 4));
  f.set(5, Rational(1));
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dual::dual_norm(f, bound));
}
BENCHMARK(BM_DualNormGauge)->DenseRange(6, 7, 1)->Unit(benchmark::kMillisecond);

void BM_DualNormPrimal(benchmark::State& state) {
  SparseVec f;
  f.set(2, Rational(1, 2));
  f.set(3, Rational(-3, 4));
  f.set(5, Rational(1));
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dual::dual_norm_primal(f, bound));
}
BENCHMARK(BM_DualNormPrimal)->DenseRange(6, 7, 1)->Unit(benchmark::kMillisecond);

void BM_IsometryScanV1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polytope::signed_perm_isometry_scan(polytope::V1Space{}, n));
}
BENCHMARK(BM_IsometryScanV1)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

}  // namespace
