#include <benchmark/benchmark.h>

#include "pellsq/bounds.hpp"
#include "pellsq/hypergeom.hpp"
#include "pellsq/search.hpp"

using namespace pellsq;

static void BM_Isqrt(benchmark::State& state) {
  BigInt n = ipow(BigInt(10), static_cast<unsigned long>(state.range(0))) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(isqrt(n));
}
BENCHMARK(BM_Isqrt)->Arg(12)->Arg(40)->Arg(150);

static void BM_SmallIsSquare(benchmark::State& state) {
  std::uint64_t n = 33203125ull * 625;
  for (auto _ : state) {
    benchmark::DoNotOptimize(small::is_square(n));
    ++n;
  }
}
BENCHMARK(BM_SmallIsSquare);

static void BM_Factorize(benchmark::State& state) {
  BigInt n = BigInt("1000000007") * BigInt("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_TwoSquares(benchmark::State& state) {
  const std::uint64_t m = 33203125ull * 625;
  for (auto _ : state) benchmark::DoNotOptimize(two_squares(m));
}
BENCHMARK(BM_TwoSquares);

static void BM_ElementAt(benchmark::State& state) {
  auto p = SequenceParams::make(42, 4, 7, 16, 6);
  for (auto _ : state) benchmark::DoNotOptimize(element_at(p, state.range(0)));
}
BENCHMARK(BM_ElementAt)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ElementsByRecurrence(benchmark::State& state) {
  auto p = SequenceParams::make(42, 4, 7, 16, 6);
  for (auto _ : state) benchmark::DoNotOptimize(elements_by_recurrence(p, -state.range(0), state.range(0)));
}
BENCHMARK(BM_ElementsByRecurrence)->Arg(40)->Arg(400);

static void BM_ComparePower(benchmark::State& state) {
  auto p = SequenceParams::make(10, 5, 5, 1, 1);
  auto v = SymbolValues::of(p);
  BigRational y(123456789);
  for (auto _ : state)
    for (const auto& t : prop41_terms()) benchmark::DoNotOptimize(compare_power(y, t, v));
}
BENCHMARK(BM_ComparePower);

static void BM_StepBounds(benchmark::State& state) {
  auto p = SequenceParams::make(10, 5, 5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(step_d_bounds(p));
}
BENCHMARK(BM_StepBounds);

static void BM_Approximants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(approximants(8, 4, -1, state.range(0)));
}
BENCHMARK(BM_Approximants)->Arg(2)->Arg(8);

static void BM_MicroSearch(benchmark::State& state) {
  SearchConfig c;
  c.b = 5;
  c.only_u = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t n = 0;
  for (auto _ : state) n = enumerate_candidates(c, [](const CandidateTuple&) {});
  state.counters["recorded"] = static_cast<double>(n);
}
BENCHMARK(BM_MicroSearch)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
