#include <benchmark/benchmark.h>

#include "cornerlab/graphs.hpp"

using namespace cornerlab;

namespace {

void BM_ChiF(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? Graph::petersen() : Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_f_lp(g));
}
BENCHMARK(BM_ChiF)->Arg(5)->Arg(11)->Arg(0);

void BM_AlphaStrongSquare(benchmark::State& state) {
  const Graph c = Graph::cycle(static_cast<int>(state.range(0)));
  const Graph g = strong_product(c, c);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(g));
}
BENCHMARK(BM_AlphaStrongSquare)->Arg(4)->Arg(5);

void BM_KornerEntropy(benchmark::State& state) {
  const Graph g = Graph::petersen();
  const std::vector<double> p(10, 0.1);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(korner_entropy(g, p, cfg));
}
BENCHMARK(BM_KornerEntropy);

}  // namespace
