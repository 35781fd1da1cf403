#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>

namespace isotri {

using BigInt = boost::multiprecision::cpp_int;

/// phi_q(t) = (1 + t + ... + t^(q-1)) * t^(-(q-1)/3) for t > 0.
/// phi_q(1) = q exactly; the derivative at 1 is q(q-1)/6.
double phi(int q, double t);

/// Global minimum of phi_q over (0, 1]. In u = log t the function is a sum
/// of exponentials, hence strictly convex, so ternary search finds the
/// unique minimizer. c_q < q always.
struct PhiMinimum {
    double t_star;
    double c_q;
};
PhiMinimum minimize_phi(int q);

/// Exact number of tuples in {0..q-1}^(2n) with coordinate sum at most
/// floor(2(q-1)n/3), by dynamic programming over digits in big-integer
/// arithmetic. Throws ResourceCapError when the DP table would be huge.
BigInt count_d(int q, int n);

/// D <= phi_q(t)^(2n) at the minimizer and on a grid of t in (0, 1]; the
/// floating bound is evaluated in high precision and shrunk before the
/// comparison so roundoff can only turn a true pass into a failure.
bool verify_d_bound(int q, int n);

/// Everything the slice-rank bound needs for one (q, n).
struct SliceRankReport {
    int q = 0;
    int n = 0;
    double t_star = 0.0;
    double c_q = 0.0;
    BigInt d;
    double bound = 0.0; // 3 * c_q^(2n)
    bool d_bound_ok = false;
};
SliceRankReport slice_rank_report(int q, int n);

} // namespace isotri
