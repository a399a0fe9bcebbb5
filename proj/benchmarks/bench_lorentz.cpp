#include <benchmark/benchmark.h>

#include "extremal/lorentz.hpp"

using namespace extremal;

namespace {

void BM_LorentzNorm(benchmark::State& state) {
  const auto w = lorentz::WeightSeq::harmonic();
  SparseVec x;
  const int n = static_cast<int>(state.range(0));
  for (int i = 1; i <= n; ++i) x.set(i, ratio((i * 7) % 5 - 2, i));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz::lorentz_norm(x, w));
}
BENCHMARK(BM_LorentzNorm)->RangeMultiplier(4)->Range(4, 256);

void BM_LorentzExtremes(benchmark::State& state) {
  const auto w = lorentz::WeightSeq::harmonic();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz::enumerate_lorentz_extremes(n, w));
}
BENCHMARK(BM_LorentzExtremes)->DenseRange(3, 6, 1);

void BM_RigidityCheck(benchmark::State& state) {
  const auto w = lorentz::WeightSeq::harmonic();
  const auto v = w.scaled(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz::rigidity_check(v, w, n));
}
BENCHMARK(BM_RigidityCheck)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace
