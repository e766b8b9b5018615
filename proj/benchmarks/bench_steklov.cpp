#include <random>

#include <benchmark/benchmark.h>

#include "steklov/families.hpp"
#include "steklov/search.hpp"
#include "steklov/steklov.hpp"

using namespace steklov;

static void BM_DtnHFamily(benchmark::State& state) {
  const GraphWithBoundary g = h_family(8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dtn_matrix(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DtnHFamily)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_SpectrumRandom(benchmark::State& state) {
  RandomGraphOptions options;
  options.interior = static_cast<std::size_t>(state.range(0));
  options.boundary = 12;
  options.seed = 1;
  const GraphWithBoundary g = random_valid_graph(options);
  for (auto _ : state) benchmark::DoNotOptimize(steklov_spectrum(g));
}
BENCHMARK(BM_SpectrumRandom)->Arg(10)->Arg(40)->Arg(160);

static void BM_Jacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> z;
  DenseSymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, z(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(eigen_symmetric(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_Search(benchmark::State& state) {
  const SearchOptions options{2, static_cast<std::size_t>(state.range(0)), 6};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_minimizer_search(options));
}
BENCHMARK(BM_Search)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
