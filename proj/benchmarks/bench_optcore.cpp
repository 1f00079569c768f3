#include <benchmark/benchmark.h>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/random.hpp"

using namespace cornerlab;

namespace {

GeneratedCorner corner_for(benchmark::State& state) {
  Rng rng(7);
  return random_standard_corner(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), rng);
}

void BM_NParam(benchmark::State& state) {
  const GeneratedCorner c = corner_for(state);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(n_param(c, cfg));
}
BENCHMARK(BM_NParam)->Args({2, 3})->Args({4, 6})->Args({8, 6})->Args({16, 8});

void BM_MParam(benchmark::State& state) {
  const GeneratedCorner c = corner_for(state);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(m_param(c, cfg));
}
BENCHMARK(BM_MParam)->Args({2, 3})->Args({4, 6})->Args({8, 6});

void BM_CornerEntropy(benchmark::State& state) {
  const GeneratedCorner c = corner_for(state);
  Rng rng(11);
  const State rho = random_state(c.dim(), rng);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(corner_entropy(c, rho, cfg));
}
BENCHMARK(BM_CornerEntropy)->Args({2, 3})->Args({4, 6})->Args({8, 6});

void BM_Eigh(benchmark::State& state) {
  Rng rng(13);
  const HermitianMatrix a = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(a));
}
BENCHMARK(BM_Eigh)->Arg(4)->Arg(16)->Arg(64);

void BM_LpSolve(benchmark::State& state) {
  // Dense random packing LP.
  const int n = static_cast<int>(state.range(0));
  Rng rng(17);
  std::vector<LinearConstraint> rows(n);
  for (auto& r : rows) {
    for (int j = 0; j < n; ++j) r.coeffs.push_back(rng.uniform());
    r.rhs = 1.0;
  }
  const std::vector<double> c(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(c, rows, Sense::Maximize));
}
BENCHMARK(BM_LpSolve)->Arg(10)->Arg(40)->Arg(100);

}  // namespace
