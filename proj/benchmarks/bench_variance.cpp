#include <benchmark/benchmark.h>

#include "dyadkde/density.hpp"
#include "dyadkde/simulation.hpp"
#include "dyadkde/variance.hpp"

using namespace dyadkde;

namespace {

DyadicSample make_sample(std::size_t n_nodes) {
  auto rng = Xoshiro256::stream(1, n_nodes);
  return sample_ngp(NgpDesign{}, n_nodes, rng);
}

void BM_SampleNgp(benchmark::State& state) {
  const auto n_nodes = static_cast<std::size_t>(state.range(0));
  auto rng = Xoshiro256::stream(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_ngp(NgpDesign{}, n_nodes, rng));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(dyad_count(n_nodes)));
}
BENCHMARK(BM_SampleNgp)->Arg(100)->Arg(400)->Arg(1600);

void BM_KernelMatrix(benchmark::State& state) {
  const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
  const KernelSpec k = gaussian();
  for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(sample, 1.645, 0.1431, k));
}
BENCHMARK(BM_KernelMatrix)->Arg(100)->Arg(400)->Arg(1600);

void BM_Omega1Fast(benchmark::State& state) {
  const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
  const auto km = kernel_matrix(sample, 1.645, 0.1431, gaussian());
  for (auto _ : state) benchmark::DoNotOptimize(omega1_hat_fast(km));
}
BENCHMARK(BM_Omega1Fast)->Arg(50)->Arg(100)->Arg(400)->Arg(1600);

void BM_Omega1Naive(benchmark::State& state) {
  const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
  const auto km = kernel_matrix(sample, 1.645, 0.1431, gaussian());
  for (auto _ : state) benchmark::DoNotOptimize(omega1_hat_naive(km));
}
BENCHMARK(BM_Omega1Naive)->Arg(50)->Arg(100);

void BM_Fit(benchmark::State& state) {
  const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
  const KernelSpec k = gaussian();
  for (auto _ : state) benchmark::DoNotOptimize(fit(sample, 1.645, 0.1431, k, 0.05));
}
BENCHMARK(BM_Fit)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
