// Serial reference recursion vs the OpenMP kernel on toric X-type sectors.
// Usage: bench_enumerate [google-benchmark flags]

#include <benchmark/benchmark.h>

#include <omp.h>

#include "qbound/clusters.hpp"

using namespace qbound;

namespace {

const ClusterModel& toric_model(std::size_t L) {
  static const ClusterModel l4 = ClusterModel::css(toric_code(4), SectorKind::kXType);
  static const ClusterModel l6 = ClusterModel::css(toric_code(6), SectorKind::kXType);
  return L == 4 ? l4 : l6;
}

void BM_Reference(benchmark::State& state) {
  const ClusterModel& model = toric_model(static_cast<std::size_t>(state.range(0)));
  const auto m_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    EnumerationResult r = reference::enumerate_undetectable(model, m_max);
    benchmark::DoNotOptimize(r.clusters.data());
  }
}

void BM_Parallel(benchmark::State& state) {
  const ClusterModel& model = toric_model(static_cast<std::size_t>(state.range(0)));
  const auto m_max = static_cast<std::size_t>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) {
    EnumerationResult r = enumerate_undetectable(model, {m_max, 50'000'000, workers});
    benchmark::DoNotOptimize(r.clusters.data());
  }
  state.counters["workers"] = workers;
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_workers = omp_get_max_threads();
  for (auto [L, m] : {std::pair{4, 8}, std::pair{6, 10}}) {
    for (int w = 1; w <= max_workers; w *= 2) b->Args({L, m, w});
    if ((max_workers & (max_workers - 1)) != 0) b->Args({L, m, max_workers});
  }
}

}  // namespace

BENCHMARK(BM_Reference)->Args({4, 8})->Args({6, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
