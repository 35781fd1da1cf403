// Branch-and-bound search and the tuple-count DP.

#include <benchmark/benchmark.h>

#include "isotri/extremal.hpp"
#include "isotri/slice_rank.hpp"

namespace {

void BM_MaxConfigurationFree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto r = isotri::max_configuration_free(n);
        benchmark::DoNotOptimize(r.max_size);
        state.counters["nodes"] = static_cast<double>(r.nodes_explored);
    }
}
BENCHMARK(BM_MaxConfigurationFree)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CountTuplesDP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(isotri::count_d(9, n));
}
BENCHMARK(BM_CountTuplesDP)->Arg(16)->Arg(64)->Arg(256);

} // namespace
