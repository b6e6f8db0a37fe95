#include <benchmark/benchmark.h>

#include "icdual/gf2.hpp"
#include "icdual/glrc.hpp"
#include "icdual/index_code.hpp"
#include "icdual/packing.hpp"
#include "icdual/random_codes.hpp"

using namespace icdual;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  random::Engine rng(1);
  gf2::BitMatrix m(0, n);
  for (std::size_t r = 0; r < n; ++r) m.append_row(random::bits(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(4)->Range(16, 1024);

static void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  random::Engine rng(2);
  gf2::BitMatrix m(0, n);
  for (std::size_t r = 0; r < n / 2; ++r) m.append_row(random::bits(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::nullspace_basis(m).dim());
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(4)->Range(16, 1024);

static void BM_FractionalPacking(benchmark::State& state) {
  random::Engine rng(3);
  const auto g = random::digraph(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fractional_cycle_packing(g).packing.value);
}
BENCHMARK(BM_FractionalPacking)->DenseRange(4, 10, 2);

static void BM_ExactFvs(benchmark::State& state) {
  random::Engine rng(4);
  const auto g = random::digraph(static_cast<std::size_t>(state.range(0)), 0.25, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_fvs(g).size);
}
BENCHMARK(BM_ExactFvs)->DenseRange(6, 14, 4);

static void BM_Minrank(benchmark::State& state) {
  random::Engine rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random::digraph(n, 0.35, rng);
  while (g.edge_count() > kDefaultMinrankFreeLimit) g = random::digraph(n, 0.35, rng);
  for (auto _ : state) benchmark::DoNotOptimize(minrank_bruteforce(g));
}
BENCHMARK(BM_Minrank)->DenseRange(3, 7, 2);

static void BM_DualizeConstructed(benchmark::State& state) {
  random::Engine rng(6);
  const auto g = random::digraph(static_cast<std::size_t>(state.range(0)), 0.4, rng);
  const auto code = construct_from_packing(fractional_cycle_packing(g).packing, g);
  for (auto _ : state) benchmark::DoNotOptimize(dual_glrc(code).k());
}
BENCHMARK(BM_DualizeConstructed)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
