#include <benchmark/benchmark.h>

#include "circlesort/detail/enumeration.hpp"
#include "circlesort/oracle.hpp"

namespace {

using circlesort::Mode;

void BM_BfsSerial(benchmark::State& state, Mode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circlesort::bfs_serial(n, mode));
}

void BM_BfsParallel(benchmark::State& state, Mode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circlesort::bfs_parallel(n, mode));
}

void BM_MaxTSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circlesort::detail::max_t_serial(n));
}

void BM_MaxTParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circlesort::detail::max_t_parallel(n));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BfsSerial, adjacent, Mode::Adjacent)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BfsParallel, adjacent, Mode::Adjacent)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BfsSerial, allswap, Mode::AllSwap)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BfsParallel, allswap, Mode::AllSwap)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxTSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxTParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
