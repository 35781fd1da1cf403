// Word-packed counting kernel vs the scalar reference path.

#include <benchmark/benchmark.h>

#include "isotri/counting_forms.hpp"
#include "isotri/parallel.hpp"

namespace {

isotri::GridSet random_grid(int side, std::uint64_t seed) {
    isotri::GridSet g(side);
    std::uint64_t state = seed;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            if (state >> 63) g.set(r, c, true);
        }
    return g;
}

void BM_DifferenceCountsPacked(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_grid(n, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            isotri::difference_counts(a, false, isotri::CountKernel::kPacked));
    state.SetItemsProcessed(state.iterations() * (2 * n - 1) * (2 * n - 1));
}
BENCHMARK(BM_DifferenceCountsPacked)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_DifferenceCountsScalar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_grid(n, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            isotri::difference_counts(a, false, isotri::CountKernel::kScalar));
    state.SetItemsProcessed(state.iterations() * (2 * n - 1) * (2 * n - 1));
}
BENCHMARK(BM_DifferenceCountsScalar)->Arg(16)->Arg(32)->Arg(64);

void BM_SingleDifferenceCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_grid(n, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(isotri::difference_count_at(a, 3, -2, false));
}
BENCHMARK(BM_SingleDifferenceCount)->Arg(64)->Arg(256)->Arg(1024);

} // namespace

int main(int argc, char** argv) {
    // Fixed worker count so runs are comparable across machines.
    isotri::set_default_threads(1);
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    return 0;
}
