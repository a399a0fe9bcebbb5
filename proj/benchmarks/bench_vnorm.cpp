#include <benchmark/benchmark.h>

#include <random>

#include "extremal/vnorm.hpp"

using namespace extremal;

namespace {

SparseVec sample(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  SparseVec x;
  for (int i = 1; i <= n; ++i) x.set(i, ratio(num(rng), 3));
  x.set(n, Rational(1));
  return x;
}

void BM_NormDp(benchmark::State& state) {
  const SparseVec x = sample(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(v1::norm_dp(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormDp)->DenseRange(4, 16, 4)->Complexity();

void BM_NormBruteforce(benchmark::State& state) {
  const SparseVec x = sample(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(v1::norm_bruteforce(x));
}
BENCHMARK(BM_NormBruteforce)->DenseRange(4, 12, 4);

}  // namespace
BENCHMARK_MAIN();
