#include <benchmark/benchmark.h>

#include <random>

#include "tropic/distance.hpp"
#include "tropic/oracle.hpp"
#include "tropic/solver.hpp"

using namespace tropic;

namespace {

struct Instance {
  Matrix a;
  Vector d;
};

Instance make(std::size_t m, std::size_t n, bool planted, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a = oracle::random_matrix(Semifield::MaxPlus, {m, n, 0.1, -10, 10}, rng);
  Vector d = planted ? a * oracle::random_vector(Semifield::MaxPlus, n, 0.1, -10, 10, rng)
                     : oracle::random_vector(Semifield::MaxPlus, m, 0.0, -10, 10, rng);
  return {std::move(a), std::move(d)};
}

void BM_Residual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance p = make(n, n, false, 7);
  for (auto _ : state) benchmark::DoNotOptimize(distance::nearest_point(p.a, p.d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Residual)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNSquared);

void BM_SolveEquation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance p = make(n, n, true, 8);
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_equation(p.a, p.d));
}
BENCHMARK(BM_SolveEquation)->RangeMultiplier(2)->Range(4, 256);

void BM_MinimalGenerators(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance p = make(4, n, true, 9);
  for (auto _ : state) benchmark::DoNotOptimize(solver::enumerate_minimal_generators(p.a, p.d));
}
BENCHMARK(BM_MinimalGenerators)->DenseRange(4, 12, 4);

void BM_ExhaustiveGenerators(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance p = make(4, n, true, 9);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exhaustive_minimal_generators(p.a, p.d));
}
BENCHMARK(BM_ExhaustiveGenerators)->DenseRange(4, 12, 4);

void BM_GridSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance p = make(4, n, false, 10);
  const auto grid = oracle::GridSpec::uniform(n, -30, 30, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::grid_min_distance(p.a, p.d, grid));
}
BENCHMARK(BM_GridSearch)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
