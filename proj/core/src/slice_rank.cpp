#include "isotri/slice_rank.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <stdexcept>

#include "isotri/errors.hpp"

namespace isotri {

namespace {

using BigFloat = boost::multiprecision::cpp_dec_float_100;

void require_order(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
}

BigFloat phi_hp(int q, const BigFloat& t) {
    BigFloat sum = 0, power = 1;
    for (int k = 0; k < q; ++k) {
        sum += power;
        power *= t;
    }
    const BigFloat expo = BigFloat(-(q - 1)) / 3;
    return sum * boost::multiprecision::pow(t, expo);
}

/// Downward-safe check of D <= phi_q(t)^(2n): the bound is computed with
/// 100 decimal digits, shrunk by a relative margin, and floored to an
/// integer before comparing.
bool d_below_bound(const BigInt& d, int q, int n, const BigFloat& t) {
    BigFloat bound = boost::multiprecision::pow(phi_hp(q, t), 2 * n);
    bound *= BigFloat(1) - BigFloat("1e-60");
    const BigInt floor_bound = bound.convert_to<BigInt>();
    return d <= floor_bound;
}

} // namespace

double phi(int q, double t) {
    require_order(q);
    if (!(t > 0.0)) throw std::invalid_argument("phi wants t > 0");
    double sum = 0.0, power = 1.0;
    for (int k = 0; k < q; ++k) {
        sum += power;
        power *= t;
    }
    return sum * std::pow(t, -(q - 1) / 3.0);
}

PhiMinimum minimize_phi(int q) {
    require_order(q);
    // In u = log t, phi(e^u) = sum_k e^(c_k u) with c_k = k - (q-1)/3:
    // strictly convex. Ternary search brackets the minimizer, then Newton
    // on the derivative polishes it past the comparison noise floor.
    double lo = std::log(1e-6), hi = 0.0;
    while (hi - lo > 1e-3) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (phi(q, std::exp(m1)) < phi(q, std::exp(m2)))
            hi = m2;
        else
            lo = m1;
    }
    double u = (lo + hi) / 2.0;
    for (int iter = 0; iter < 100; ++iter) {
        double d1 = 0.0, d2 = 0.0;
        for (int k = 0; k < q; ++k) {
            const double c = k - (q - 1) / 3.0;
            const double term = std::exp(c * u);
            d1 += c * term;
            d2 += c * c * term;
        }
        const double step = d1 / d2;
        u -= step;
        if (std::abs(step) < 1e-15) break;
    }
    const double t_star = std::exp(std::min(u, 0.0));
    return {t_star, phi(q, t_star)};
}

BigInt count_d(int q, int n) {
    require_order(q);
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    const std::int64_t digits = 2 * static_cast<std::int64_t>(n);
    const std::int64_t cap = digits * (q - 1);
    if (cap > 2'000'000) throw ResourceCapError("tuple-count DP table too large");
    // Sum bound floor(2(q-1)n/3); the exponent sums are integers, so the
    // floor loses nothing.
    const std::int64_t limit = 2 * static_cast<std::int64_t>(q - 1) * n / 3;

    std::vector<BigInt> ways(static_cast<std::size_t>(limit) + 1, 0);
    ways[0] = 1;
    for (std::int64_t digit = 0; digit < digits; ++digit) {
        std::vector<BigInt> next(static_cast<std::size_t>(limit) + 1, 0);
        for (std::int64_t s = 0; s <= limit; ++s) {
            if (ways[static_cast<std::size_t>(s)] == 0) continue;
            for (int v = 0; v < q && s + v <= limit; ++v)
                next[static_cast<std::size_t>(s + v)] += ways[static_cast<std::size_t>(s)];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& w : ways) total += w;
    return total;
}

bool verify_d_bound(int q, int n) {
    const BigInt d = count_d(q, n);
    const PhiMinimum m = minimize_phi(q);
    if (!d_below_bound(d, q, n, BigFloat(m.t_star))) return false;
    // Sharper property: the weighted-sum bound holds for every t in (0,1].
    for (int k = 1; k <= 100; ++k) {
        const BigFloat t = BigFloat(k) / 100;
        if (!d_below_bound(d, q, n, t)) return false;
    }
    return true;
}

SliceRankReport slice_rank_report(int q, int n) {
    SliceRankReport r;
    r.q = q;
    r.n = n;
    const PhiMinimum m = minimize_phi(q);
    r.t_star = m.t_star;
    r.c_q = m.c_q;
    r.d = count_d(q, n);
    r.bound = 3.0 * std::pow(m.c_q, 2.0 * n);
    r.d_bound_ok = verify_d_bound(q, n);
    return r;
}

} // namespace isotri
