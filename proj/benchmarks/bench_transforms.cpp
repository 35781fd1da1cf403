// Transform kernels and the counting-form evaluators.

#include <benchmark/benchmark.h>

#include "isotri/counting_forms.hpp"
#include "isotri/cyclic_group.hpp"

namespace {

isotri::GroupFunction1D random_1d(isotri::CyclicGroup g, std::uint64_t seed) {
    std::vector<double> v(static_cast<std::size_t>(g.modulus));
    std::uint64_t state = seed;
    for (double& x : v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    return {g, std::move(v)};
}

isotri::GroupFunction2D random_2d(isotri::CyclicGroup g, std::uint64_t seed) {
    std::vector<double> v(static_cast<std::size_t>(g.modulus) *
                          static_cast<std::size_t>(g.modulus));
    std::uint64_t state = seed;
    for (double& x : v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    return {g, std::move(v)};
}

void BM_Dft1Direct(benchmark::State& state) {
    const auto f = random_1d(isotri::CyclicGroup{static_cast<int>(state.range(0))}, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(isotri::dft1(f, isotri::TransformPath::kDirect));
}
BENCHMARK(BM_Dft1Direct)->Arg(128)->Arg(512)->Arg(1024);

void BM_Dft1Bluestein(benchmark::State& state) {
    const auto f = random_1d(isotri::CyclicGroup{static_cast<int>(state.range(0))}, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(isotri::dft1(f, isotri::TransformPath::kFast));
}
BENCHMARK(BM_Dft1Bluestein)->Arg(128)->Arg(512)->Arg(1024)->Arg(4096);

void BM_Dft2(benchmark::State& state) {
    const auto f = random_2d(isotri::CyclicGroup{static_cast<int>(state.range(0))}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(isotri::dft2(f));
}
BENCHMARK(BM_Dft2)->Arg(45)->Arg(101)->Arg(135);

void BM_LambdaFourierWeighted(benchmark::State& state) {
    const isotri::CyclicGroup g{static_cast<int>(state.range(0))};
    const auto f = random_2d(g, 3);
    const auto chi = random_1d(g, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(isotri::lambda_fourier_weighted(f, f, f, chi));
}
BENCHMARK(BM_LambdaFourierWeighted)->Arg(9)->Arg(27)->Arg(45);

void BM_LambdaDirectCompactWeight(benchmark::State& state) {
    // Weight supported on {0}: the certificate-path workload.
    const isotri::CyclicGroup g{static_cast<int>(state.range(0))};
    const auto f = random_2d(g, 5);
    auto chi = isotri::GroupFunction1D::constant(g, 0.0);
    chi.values[0] = static_cast<double>(g.modulus);
    for (auto _ : state) benchmark::DoNotOptimize(isotri::lambda_direct(f, f, f, chi));
}
BENCHMARK(BM_LambdaDirectCompactWeight)->Arg(45)->Arg(101)->Arg(321);

} // namespace
