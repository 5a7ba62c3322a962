#include <benchmark/benchmark.h>

#include <random>

#include "adel/dsl.hpp"
#include "adel/normal_forms.hpp"
#include "adel/provers.hpp"

using namespace adel;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> e(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

void BM_Hnf(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Snf(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_DecideHomotopy(benchmark::State& state) {
  const CategoryRef c = snake_category();
  const MatMorphism alpha = parse_matrix(c, "(a, b)", "(c, c)", "[alpha*beta, 2*alpha*beta; beta, -beta]");
  const MatMorphism beta = parse_matrix(c, "(b, b)", "(c, c)", "[beta, 0; 0, beta]");
  const MatMorphism gamma = parse_matrix(c, "(a, b)", "(b)", "[alpha; id_b]");
  for (auto _ : state) benchmark::DoNotOptimize(decide_homotopy(alpha, beta, gamma));
}
BENCHMARK(BM_DecideHomotopy);

void BM_ProveSnake(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_snake().passed());
}
BENCHMARK(BM_ProveSnake)->Unit(benchmark::kMillisecond);

void BM_ProveFive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_refined_five().passed());
}
BENCHMARK(BM_ProveFive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
