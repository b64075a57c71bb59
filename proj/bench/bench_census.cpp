// Serial vs OpenMP brute-force census of sortable two-rooted graphs.

#include <benchmark/benchmark.h>

#include "cdslab/oracle.hpp"
#include "cdslab/parallel.hpp"

namespace {

void BM_CensusSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cdslab::oracle::census_serial(n));
}

void BM_CensusParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    if (const auto env = cdslab::threads_from_env()) cdslab::set_thread_count(*env);
    for (auto _ : state) benchmark::DoNotOptimize(cdslab::oracle::census_parallel(n));
    state.counters["threads"] = static_cast<double>(cdslab::thread_count());
}

}  // namespace

BENCHMARK(BM_CensusSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
