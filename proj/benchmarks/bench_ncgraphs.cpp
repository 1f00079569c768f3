#include <benchmark/benchmark.h>

#include "cornerlab/ncgraphs.hpp"
#include "cornerlab/tensorprod.hpp"

using namespace cornerlab;

namespace {

void BM_NcParamsGraph(benchmark::State& state) {
  const OperatorSystem s = opsys_from_graph(Graph::cycle(static_cast<int>(state.range(0))));
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(nc_params(s, cfg));
}
BENCHMARK(BM_NcParamsGraph)->Arg(5)->Arg(7);

void BM_NcParamsC5Squared(benchmark::State& state) {
  const OperatorSystem c5 = opsys_from_graph(Graph::cycle(5));
  const OperatorSystem s = tensor(c5, c5);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(nc_params(s, cfg));
}
BENCHMARK(BM_NcParamsC5Squared)->Unit(benchmark::kMillisecond);

void BM_SearchedFamily(benchmark::State& state) {
  const OperatorSystem s = builtin_family("s:" + std::to_string(state.range(0))).forget_origin();
  for (auto _ : state) benchmark::DoNotOptimize(projection_families(s, ProjKind::Full));
}
BENCHMARK(BM_SearchedFamily)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NcEntropyC5(benchmark::State& state) {
  const OperatorSystem s = opsys_from_graph(Graph::cycle(5));
  const State rho = State::maximally_mixed(5);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(nc_graph_entropy(s, rho, cfg));
}
BENCHMARK(BM_NcEntropyC5);

void BM_MinTensor(benchmark::State& state) {
  const GeneratedCorner b = GeneratedCorner::unit_trace(2);
  const HermitianMatrix m = 0.2 * HermitianMatrix::identity(4);
  const SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(min_tensor_membership(b, b, m, cfg));
}
BENCHMARK(BM_MinTensor);

}  // namespace
