#include <benchmark/benchmark.h>

#include "chahn/asymptotics.hpp"
#include "chahn/harness.hpp"
#include "chahn/polynomial.hpp"
#include "chahn/zeros.hpp"

namespace {

const chahn::Params& half() {
  static const chahn::Params p = chahn::make_params(0.5, 0.5, 0.5, 0.5);
  return p;
}

void BM_MonicEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chahn::monic_eval(n, chahn::Complex(0.3 * n, 0.1), half()));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MonicEval)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chahn::oracle_monic(n, chahn::Complex(0.8 * n, 0.5 * n), half()));
}
BENCHMARK(BM_Oracle)->Arg(10)->Arg(30);

void BM_Outer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chahn::asymptotics::outer_approx(160, 1.0, half()));
}
BENCHMARK(BM_Outer);

void BM_Uniform(benchmark::State& state) {
  using chahn::asymptotics::Side;
  for (auto _ : state) benchmark::DoNotOptimize(chahn::asymptotics::uniform_approx(160, 0.48, Side::Plus, half()));
}
BENCHMARK(BM_Uniform);

void BM_AllZeros(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chahn::zeros::all_zeros(n, half()));
  state.SetComplexityN(n);
}
BENCHMARK(BM_AllZeros)->RangeMultiplier(2)->Range(20, 320)->Complexity();

void BM_Gram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chahn::harness::gram_matrix(12, half()));
}
BENCHMARK(BM_Gram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
