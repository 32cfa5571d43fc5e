#include <benchmark/benchmark.h>

#include <random>

#include "slopecert/exactlin.hpp"

using namespace slopecert::exactlin;

namespace {

IntMatrix random_matrix(int n, int seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    auto d = smith_normal_form(m);
    benchmark::DoNotOptimize(d.s);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 20, 4)->Complexity();

static void BM_RationalKernel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto k = rational_kernel_basis(m);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_RationalKernel)->DenseRange(4, 16, 4);

static void BM_HermiteLattice(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> entry(-50, 50);
  std::vector<Vec2> gens;
  for (int i = 0; i < 32; ++i) gens.push_back({2 * entry(rng), 3 * entry(rng) + 1});
  for (auto _ : state) {
    auto l = hermite_lattice(gens);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_HermiteLattice);

BENCHMARK_MAIN();
