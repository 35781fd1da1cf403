#pragma once

// Shared test utilities: a portable deterministic RNG (the standard
// distributions are implementation-defined, so frozen expected values use
// raw bit manipulation only) and small independent oracles.

#include <cstdint>
#include <utility>
#include <vector>

#include "isotri/cyclic_group.hpp"
#include "isotri/grid_set.hpp"

namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        // splitmix64; stable across platforms and standard libraries.
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

inline isotri::GroupFunction1D random_function_1d(isotri::CyclicGroup g, Rng& rng,
                                                  double lo = 0.0, double hi = 1.0) {
    std::vector<double> v(static_cast<std::size_t>(g.modulus));
    for (double& x : v) x = lo + (hi - lo) * rng.uniform();
    return {g, std::move(v)};
}

inline isotri::GroupFunction2D random_function_2d(isotri::CyclicGroup g, Rng& rng,
                                                  double lo = 0.0, double hi = 1.0) {
    std::vector<double> v(static_cast<std::size_t>(g.modulus) * static_cast<std::size_t>(g.modulus));
    for (double& x : v) x = lo + (hi - lo) * rng.uniform();
    return {g, std::move(v)};
}

inline isotri::GridSet random_grid(int side, double density, Rng& rng) {
    isotri::GridSet g(side);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (rng.coin(density)) g.set(r, c, true);
    return g;
}

inline isotri::GridSet full_grid(int side) {
    isotri::GridSet g(side);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) g.set(r, c, true);
    return g;
}

/// Indicator of a grid set in (Z/side)^2.
inline isotri::GroupFunction2D indicator(const isotri::GridSet& a) {
    isotri::GroupFunction2D f =
        isotri::GroupFunction2D::constant(isotri::CyclicGroup{a.side()}, 0.0);
    for (const auto& [r, c] : a.points()) f.at(r, c) = 1.0;
    return f;
}

} // namespace testutil
