#include <benchmark/benchmark.h>

#include <cmath>

#include "diracosc/solutions.hpp"
#include "diracosc/specialfn.hpp"
#include "diracosc/superalgebra.hpp"
#include "diracosc/tridiag.hpp"

using namespace diracosc;

static void BM_Laguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    benchmark::DoNotOptimize(laguerre(n, 0.5, 3.0 + x));
  }
}
BENCHMARK(BM_Laguerre)->Arg(5)->Arg(20)->Arg(100);

static void BM_EigenvaluesLowest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto grid = RadialGrid::uniform(12.0, n);
  auto op = discretize(
      [](double r) { return 2.0 / (r * r) + r * r + 1.0; }, grid);
  for (auto _ : state) {
    auto vals = eigenvalues_lowest(op, 5);
    benchmark::DoNotOptimize(vals);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EigenvaluesLowest)->RangeMultiplier(2)->Range(1000, 16000)->Complexity();

static void BM_RealizeAlgebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto grid = RadialGrid::uniform(12.0, n);
  Superpotential g{-1.0, OddForm::linear(1.0)};
  for (auto _ : state) {
    auto alg = realize_algebra(g, grid);
    benchmark::DoNotOptimize(alg.L0);
  }
}
BENCHMARK(BM_RealizeAlgebra)->Arg(128)->Arg(256);

static void BM_CoulombSolution(benchmark::State& state) {
  for (auto _ : state) {
    auto s = coulomb_solution(3, -1, -0.5, 1.0);
    benchmark::DoNotOptimize(s.phi(1.0));
  }
}
BENCHMARK(BM_CoulombSolution);

BENCHMARK_MAIN();
