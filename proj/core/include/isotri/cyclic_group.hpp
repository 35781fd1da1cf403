#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace isotri {

/// The cyclic group Z/N with its uniform probability measure (weight 1/N
/// per element). Frequencies live in the dual group, again Z/N: frequency
/// xi pairs with x as xi*x/N mod 1.
struct CyclicGroup {
    int modulus;

    explicit CyclicGroup(int n);

    /// Doubling x -> 2x is a bijection on Z/N exactly when N is odd.
    bool two_divisible() const { return modulus % 2 == 1; }

    friend bool operator==(const CyclicGroup& a, const CyclicGroup& b) {
        return a.modulus == b.modulus;
    }
};

inline bool is_two_divisible(const CyclicGroup& g) { return g.two_divisible(); }

/// Distance of k/N to the nearest integer: min(k mod N, N - k mod N)/N,
/// always in [0, 1/2]. Total in k (negative and >= N inputs are reduced).
double norm_rz(std::int64_t k, int modulus);

/// Real function on Z/N.
struct GroupFunction1D {
    CyclicGroup group;
    std::vector<double> values;

    GroupFunction1D(CyclicGroup g, std::vector<double> v);
    static GroupFunction1D constant(CyclicGroup g, double c);

    int n() const { return group.modulus; }
    double at(int x) const { return values[static_cast<std::size_t>(x)]; }
    /// Mean against the probability measure: sum/N.
    double mean() const;
};

/// Real function on (Z/N)^2, row index x, column index y.
struct GroupFunction2D {
    CyclicGroup group;
    std::vector<double> values; // row-major, N*N

    GroupFunction2D(CyclicGroup g, std::vector<double> v);
    static GroupFunction2D constant(CyclicGroup g, double c);

    int n() const { return group.modulus; }
    double at(int x, int y) const {
        return values[static_cast<std::size_t>(x) * static_cast<std::size_t>(group.modulus) +
                      static_cast<std::size_t>(y)];
    }
    double& at(int x, int y) {
        return values[static_cast<std::size_t>(x) * static_cast<std::size_t>(group.modulus) +
                      static_cast<std::size_t>(y)];
    }
    double mean() const;
};

/// Fourier coefficients of a 1-D function, indexed by frequency.
/// Normalization: coeff(xi) = N^-1 sum_x f(x) e(-xi*x/N).
struct Spectrum1D {
    CyclicGroup group;
    std::vector<std::complex<double>> coeffs;

    int n() const { return group.modulus; }
    std::complex<double> at(int xi) const { return coeffs[static_cast<std::size_t>(xi)]; }
};

/// Fourier coefficients of a 2-D function, indexed by (xi, zeta).
/// Normalization: coeff(xi,zeta) = N^-2 sum_{x,y} f(x,y) e(-(xi x + zeta y)/N),
/// so Plancherel reads sum |coeff|^2 = N^-2 sum |f|^2.
struct Spectrum2D {
    CyclicGroup group;
    std::vector<std::complex<double>> coeffs; // row-major, N*N

    int n() const { return group.modulus; }
    std::complex<double> at(int xi, int zeta) const {
        return coeffs[static_cast<std::size_t>(xi) * static_cast<std::size_t>(group.modulus) +
                      static_cast<std::size_t>(zeta)];
    }
    std::complex<double>& at(int xi, int zeta) {
        return coeffs[static_cast<std::size_t>(xi) * static_cast<std::size_t>(group.modulus) +
                      static_cast<std::size_t>(zeta)];
    }
};

/// Which 1-D transform kernel to use per axis. Auto switches from the
/// direct O(N^2) sum to a Bluestein chirp transform above N = 128; the
/// direct path doubles as the accuracy oracle for the fast one.
enum class TransformPath { kAuto, kDirect, kFast };

Spectrum1D dft1(const GroupFunction1D& f, TransformPath path = TransformPath::kAuto);
GroupFunction1D idft1(const Spectrum1D& s, TransformPath path = TransformPath::kAuto);
Spectrum2D dft2(const GroupFunction2D& f, TransformPath path = TransformPath::kAuto);
GroupFunction2D idft2(const Spectrum2D& s, TransformPath path = TransformPath::kAuto);

/// Convolution in L^1 of the probability space: (u*v)(x) = N^-1 sum_s u(x-s) v(s).
/// Throws std::invalid_argument on mismatched moduli.
GroupFunction1D convolve1(const GroupFunction1D& u, const GroupFunction1D& v);

/// Separable 2-D convolution against the product kernel w(x,y)=k(x)k(y):
/// (f * (k tensor k))(x,y) = N^-2 sum_{u,v} f(x-u, y-v) k(u) k(v).
/// When k is the point mass N*1_{0} the result is f itself, bit for bit.
GroupFunction2D convolve2_product(const GroupFunction2D& f, const GroupFunction1D& k);

} // namespace isotri
