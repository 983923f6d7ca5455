#include <benchmark/benchmark.h>
static void BM_noop(benchmark::State& st) { for (auto _ : st) benchmark::DoNotOptimize(1); }
BENCHMARK(BM_noop);
BENCHMARK_MAIN();
