#include <benchmark/benchmark.h>

#include "hgstate/boolean.hpp"
#include "hgstate/entanglement.hpp"

namespace {

using namespace hgs;

void BM_BuildState(benchmark::State& st) {
  const auto g = complete_k_graph(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(build_state(g));
}
BENCHMARK(BM_BuildState)->DenseRange(8, 20, 4);

void BM_MoebiusTransform(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto f = boolean_from_hypergraph(complete_k_graph(n, 2));
  for (auto _ : st) benchmark::DoNotOptimize(hypergraph_from_boolean(f));
}
BENCHMARK(BM_MoebiusTransform)->DenseRange(8, 20, 4);

void BM_JacobiDensePT(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const DensityMatrix rho(build_state(complete_k_graph(n, n)));
  const auto pt = partial_transpose(rho, CutSet::leading(n / 2, n));
  for (auto _ : st) benchmark::DoNotOptimize(symmetric_eigenvalues(pt));
}
BENCHMARK(BM_JacobiDensePT)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SchmidtNegativity(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto state = build_state(complete_k_graph(n, n));
  const auto cut = CutSet::leading(n / 2, n);
  for (auto _ : st) benchmark::DoNotOptimize(negativity(state, cut, Method::schmidt));
}
BENCHMARK(BM_SchmidtNegativity)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
