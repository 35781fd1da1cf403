#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "isotri/cyclic_group.hpp"
#include "support.hpp"

using namespace isotri;
using testutil::Rng;

namespace {

// Independent transform oracle: the normalization written out verbatim.
std::complex<double> dft2_oracle_at(const GroupFunction2D& f, int xi, int zeta) {
    const int n = f.n();
    std::complex<double> acc{0.0, 0.0};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const double ang = -2.0 * std::numbers::pi *
                               (static_cast<double>(xi) * x + static_cast<double>(zeta) * y) / n;
            acc += f.at(x, y) * std::polar(1.0, ang);
        }
    return acc / (static_cast<double>(n) * static_cast<double>(n));
}

} // namespace

TEST_SUITE("cyclic-group") {

TEST_CASE("norm_rz examples and range") {
    CHECK(norm_rz(0, 10) == 0.0);
    CHECK(norm_rz(5, 10) == 0.5);
    CHECK(norm_rz(7, 10) == doctest::Approx(0.3).epsilon(1e-15));
    for (int n = 1; n <= 50; ++n)
        for (int k = -2 * n; k <= 2 * n; ++k) {
            const double v = norm_rz(k, n);
            CHECK(v >= 0.0);
            CHECK(v <= 0.5);
        }
}

TEST_CASE("norm_rz symmetry and periodicity") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(1000));
        const auto k = static_cast<std::int64_t>(rng.below(5000)) - 2500;
        CHECK(norm_rz(k, n) == norm_rz(-k, n));
        CHECK(norm_rz(k, n) == norm_rz(k + n, n));
    }
}

TEST_CASE("two-divisibility is odd order") {
    CHECK(is_two_divisible(CyclicGroup{9}));
    CHECK_FALSE(is_two_divisible(CyclicGroup{8}));
    CHECK(is_two_divisible(CyclicGroup{1}));
    CHECK_THROWS_AS(CyclicGroup{0}, std::invalid_argument);
}

TEST_CASE("dft2 of constants and deltas") {
    const CyclicGroup g{6};
    const auto ones = GroupFunction2D::constant(g, 1.0);
    const Spectrum2D s = dft2(ones);
    for (int xi = 0; xi < 6; ++xi)
        for (int zeta = 0; zeta < 6; ++zeta) {
            const double expect = (xi == 0 && zeta == 0) ? 1.0 : 0.0;
            CHECK(std::abs(s.at(xi, zeta) - expect) < 1e-12);
        }

    auto delta = GroupFunction2D::constant(g, 0.0);
    delta.at(0, 0) = 36.0;
    const Spectrum2D sd = dft2(delta);
    for (const auto& c : sd.coeffs) CHECK(std::abs(c - 1.0) < 1e-12);
}

TEST_CASE("Plancherel against the direct double-sum oracle") {
    Rng rng(42);
    const CyclicGroup g{7};
    const auto f = testutil::random_function_2d(g, rng);
    const Spectrum2D s = dft2(f);

    double lhs = 0.0;
    for (const auto& c : s.coeffs) lhs += std::norm(c);
    double rhs = 0.0;
    for (double v : f.values) rhs += v * v;
    rhs /= 49.0;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

    // Spot-check coefficients against the verbatim formula.
    for (int xi = 0; xi < 7; ++xi)
        for (int zeta = 0; zeta < 7; ++zeta)
            CHECK(std::abs(s.at(xi, zeta) - dft2_oracle_at(f, xi, zeta)) < 1e-12);
}

TEST_CASE("transform round-trips for all odd moduli up to 101") {
    Rng rng(7);
    for (int n = 1; n <= 101; n += 2) {
        const CyclicGroup g{n};
        const auto f = testutil::random_function_2d(g, rng, -1.0, 1.0);
        const GroupFunction2D back = idft2(dft2(f));
        double err = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            err = std::max(err, std::abs(f.values[i] - back.values[i]));
        CHECK(err < 1e-9);
    }
}

TEST_CASE("convolution examples") {
    const CyclicGroup g{5};
    SUBCASE("constants") {
        const auto u = GroupFunction1D::constant(g, 1.0);
        const auto out = convolve1(u, u);
        for (double v : out.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("point mass is the identity") {
        Rng rng(3);
        auto delta = GroupFunction1D::constant(g, 0.0);
        delta.values[0] = 5.0;
        const auto v = testutil::random_function_1d(g, rng);
        const auto out = convolve1(delta, v);
        for (int x = 0; x < 5; ++x) CHECK(out.at(x) == doctest::Approx(v.at(x)).epsilon(1e-14));
    }
    SUBCASE("two-point mass, hand-computed") {
        // u = v = N*1_{0,1}/2 on N=5: representation counts give
        // (5/4, 5/2, 5/4, 0, 0).
        auto u = GroupFunction1D::constant(g, 0.0);
        u.values[0] = 2.5;
        u.values[1] = 2.5;
        const auto out = convolve1(u, u);
        CHECK(out.at(0) == doctest::Approx(1.25).epsilon(1e-15));
        CHECK(out.at(1) == doctest::Approx(2.5).epsilon(1e-15));
        CHECK(out.at(2) == doctest::Approx(1.25).epsilon(1e-15));
        CHECK(out.at(3) == 0.0);
        CHECK(out.at(4) == 0.0);
    }
    SUBCASE("mismatched moduli") {
        const auto u = GroupFunction1D::constant(g, 1.0);
        const auto v = GroupFunction1D::constant(CyclicGroup{7}, 1.0);
        CHECK_THROWS_AS(convolve1(u, v), std::invalid_argument);
    }
}

TEST_CASE("convolution theorem and mean identity") {
    Rng rng(99);
    for (int n = 2; n <= 50; n += 7) {
        const CyclicGroup g{n};
        const auto u = testutil::random_function_1d(g, rng, -1.0, 1.0);
        const auto v = testutil::random_function_1d(g, rng, -1.0, 1.0);
        const auto w = convolve1(u, v);

        CHECK(w.mean() == doctest::Approx(u.mean() * v.mean()).epsilon(1e-10));

        const Spectrum1D su = dft1(u), sv = dft1(v), sw = dft1(w);
        for (int xi = 0; xi < n; ++xi)
            CHECK(std::abs(sw.at(xi) - su.at(xi) * sv.at(xi)) < 1e-12);
    }
}

TEST_CASE("direct and fast transform paths agree") {
    Rng rng(1234);
    for (int n : {100, 129, 200, 321}) {
        const CyclicGroup g{n};
        const auto u = testutil::random_function_1d(g, rng, -1.0, 1.0);
        const Spectrum1D slow = dft1(u, TransformPath::kDirect);
        const Spectrum1D fast = dft1(u, TransformPath::kFast);
        double err = 0.0;
        for (int xi = 0; xi < n; ++xi) err = std::max(err, std::abs(slow.at(xi) - fast.at(xi)));
        CHECK(err < 1e-9);

        const auto back = idft1(fast, TransformPath::kFast);
        double round = 0.0;
        for (int x = 0; x < n; ++x) round = std::max(round, std::abs(back.at(x) - u.at(x)));
        CHECK(round < 1e-9);
    }
}

TEST_CASE("2-D fast path agrees with the direct oracle above the cutoff") {
    Rng rng(5);
    const CyclicGroup g{135};
    const auto f = testutil::random_function_2d(g, rng);
    const Spectrum2D fast = dft2(f); // auto -> Bluestein at this size
    const Spectrum2D slow = dft2(f, TransformPath::kDirect);
    double err = 0.0;
    for (std::size_t i = 0; i < fast.coeffs.size(); ++i)
        err = std::max(err, std::abs(fast.coeffs[i] - slow.coeffs[i]));
    CHECK(err < 1e-9);
}

} // TEST_SUITE
