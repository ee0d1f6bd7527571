#include <benchmark/benchmark.h>

#include "weyl/laplacian.hpp"

namespace {

void BM_PolarDecompose(benchmark::State& state) {
  weyl::Rng rng(3);
  const weyl::Matrix v = weyl::randomUnitary(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::polarDecompose(v));
}
BENCHMARK(BM_PolarDecompose)->DenseRange(2, 6);

void BM_StructureConstants(benchmark::State& state) {
  const auto basis = weyl::buildBasis(static_cast<int>(state.range(0)), weyl::AlgebraKind::FullUnitary);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::structureConstants(basis));
}
BENCHMARK(BM_StructureConstants)->DenseRange(2, 4);

void BM_CasimirLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  weyl::Rng rng(5);
  const weyl::Matrix v = weyl::randomUnitary(n, rng);
  const auto basis = weyl::buildBasis(n, weyl::AlgebraKind::FullUnitary);
  const auto psi = weyl::matrixElement(weyl::definingRep(n), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::casimirLaplacian(psi, v, basis));
}
BENCHMARK(BM_CasimirLaplacian)->DenseRange(2, 4);

void BM_FullLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  weyl::Rng rng(5);
  const weyl::Matrix v = weyl::randomRegularUnitary(n, 0.3, rng);
  const auto psi = weyl::matrixElement(weyl::definingRep(n), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::fullLaplacian(psi, v));
}
BENCHMARK(BM_FullLaplacian)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
