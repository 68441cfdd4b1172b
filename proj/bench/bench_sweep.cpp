// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "cbirk/sweep.hpp"

using namespace cbirk;

static void BM_VerifySerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_sweep_serial(static_cast<int>(st.range(0))));
}
static void BM_VerifyParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_sweep_parallel(static_cast<int>(st.range(0))));
}
static void BM_RelationsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(relation_sweep_serial(static_cast<int>(st.range(0))));
}
static void BM_RelationsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(relation_sweep_parallel(static_cast<int>(st.range(0))));
}
static void BM_ClassifySerial(benchmark::State& st) {
  auto c = tamari(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(classify_singletons_serial(c));
}
static void BM_ClassifyParallel(benchmark::State& st) {
  auto c = tamari(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(classify_singletons_parallel(c));
}

BENCHMARK(BM_VerifySerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RelationsSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RelationsParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifySerial)->DenseRange(6, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyParallel)->DenseRange(6, 7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
