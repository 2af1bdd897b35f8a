#include <benchmark/benchmark.h>

#include <random>

#include "entdist/classifier.hpp"
#include "entdist/linalg.hpp"
#include "entdist/negativity.hpp"
#include "entdist/scenarios.hpp"

namespace entdist {
namespace {

ComplexMatrix hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(g(rng), g(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

void BM_Eigenvalues(benchmark::State& state) {
  Rng rng(1);
  const auto m = hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Arg(32);

void BM_EigenVectors(benchmark::State& state) {
  Rng rng(2);
  const auto m = hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_EigenVectors)->Arg(8)->Arg(16);

void BM_DeltaNegativity(benchmark::State& state) {
  const auto rho = assemble(build_fig2(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(delta_negativity(rho));
}
BENCHMARK(BM_DeltaNegativity);

void BM_Classify(benchmark::State& state) {
  const auto e = build_fig3(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(classify(e));
}
BENCHMARK(BM_Classify);

void BM_SweepFig2(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(ScenarioId::kFig2, 0.01, 0.99, steps));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_SweepFig2)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_CrossingFig2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_crossing(ScenarioId::kFig2, 0.05, 0.9, 1e-4));
}
BENCHMARK(BM_CrossingFig2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace entdist

BENCHMARK_MAIN();
