#include "isotri/cyclic_group.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isotri {

namespace {

using cd = std::complex<double>;

void require_same_group(const CyclicGroup& a, const CyclicGroup& b) {
    if (!(a == b)) {
        throw std::invalid_argument("cyclic group modulus mismatch: " +
                                    std::to_string(a.modulus) + " vs " +
                                    std::to_string(b.modulus));
    }
}

/// e(-2*pi*i * k/n) for k in [0, n), tabulated once per call site.
std::vector<cd> twiddles(int n, int sign) {
    std::vector<cd> w(static_cast<std::size_t>(n));
    const double step = sign * 2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = std::polar(1.0, step * k);
    return w;
}

/// Direct O(n^2) transform of one vector: out[k] = sum_j in[j] e(sign*2pi*i jk/n).
std::vector<cd> dft_direct(const std::vector<cd>& in, int sign) {
    const int n = static_cast<int>(in.size());
    const auto w = twiddles(n, sign);
    std::vector<cd> out(in.size());
    for (int k = 0; k < n; ++k) {
        cd acc = 0.0;
        std::int64_t idx = 0;
        for (int j = 0; j < n; ++j) {
            acc += in[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(idx)];
            idx += k;
            if (idx >= n) idx -= n;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

/// Iterative radix-2 FFT, size must be a power of two.
void fft_pow2(std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cd wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cd w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

/// Bluestein chirp transform for arbitrary n:
/// out[k] = sum_j in[j] e(sign*2pi*i jk/n), via jk = (j^2 + k^2 - (j-k)^2)/2.
/// Chirp phases use j^2 mod 2n to keep arguments small.
std::vector<cd> dft_bluestein(const std::vector<cd>& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::size_t m = std::bit_ceil(static_cast<std::size_t>(2 * n - 1));
    const double base = sign * std::numbers::pi / n;

    std::vector<cd> chirp(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::int64_t r = (static_cast<std::int64_t>(j) * j) % (2 * n);
        chirp[static_cast<std::size_t>(j)] = std::polar(1.0, base * static_cast<double>(r));
    }

    std::vector<cd> a(m, cd{0.0, 0.0}), b(m, cd{0.0, 0.0});
    for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(j)] * chirp[static_cast<std::size_t>(j)];
    b[0] = std::conj(chirp[0]);
    for (int j = 1; j < n; ++j) {
        const cd c = std::conj(chirp[static_cast<std::size_t>(j)]);
        b[static_cast<std::size_t>(j)] = c;
        b[m - static_cast<std::size_t>(j)] = c;
    }

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv_m = 1.0 / static_cast<double>(m);

    std::vector<cd> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * inv_m * chirp[static_cast<std::size_t>(k)];
    return out;
}

constexpr int kDirectCutoff = 128;

std::vector<cd> dft_axis(const std::vector<cd>& in, int sign, TransformPath path) {
    const int n = static_cast<int>(in.size());
    if (n == 1) return in;
    const bool fast = path == TransformPath::kFast ||
                      (path == TransformPath::kAuto && n > kDirectCutoff);
    return fast ? dft_bluestein(in, sign) : dft_direct(in, sign);
}

} // namespace

CyclicGroup::CyclicGroup(int n) : modulus(n) {
    if (n < 1) throw std::invalid_argument("cyclic group modulus must be >= 1");
}

double norm_rz(std::int64_t k, int modulus) {
    if (modulus < 1) throw std::invalid_argument("norm_rz: modulus must be >= 1");
    std::int64_t r = k % modulus;
    if (r < 0) r += modulus;
    const std::int64_t d = std::min(r, modulus - r);
    return static_cast<double>(d) / static_cast<double>(modulus);
}

GroupFunction1D::GroupFunction1D(CyclicGroup g, std::vector<double> v)
    : group(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(group.modulus))
        throw std::invalid_argument("GroupFunction1D: value count must equal the modulus");
}

GroupFunction1D GroupFunction1D::constant(CyclicGroup g, double c) {
    return {g, std::vector<double>(static_cast<std::size_t>(g.modulus), c)};
}

double GroupFunction1D::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / group.modulus;
}

GroupFunction2D::GroupFunction2D(CyclicGroup g, std::vector<double> v)
    : group(g), values(std::move(v)) {
    const std::size_t n = static_cast<std::size_t>(group.modulus);
    if (values.size() != n * n)
        throw std::invalid_argument("GroupFunction2D: value count must equal modulus^2");
}

GroupFunction2D GroupFunction2D::constant(CyclicGroup g, double c) {
    const std::size_t n = static_cast<std::size_t>(g.modulus);
    return {g, std::vector<double>(n * n, c)};
}

double GroupFunction2D::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / (static_cast<double>(group.modulus) * static_cast<double>(group.modulus));
}

Spectrum1D dft1(const GroupFunction1D& f, TransformPath path) {
    const int n = f.n();
    std::vector<cd> in(f.values.begin(), f.values.end());
    std::vector<cd> out = dft_axis(in, -1, path);
    for (auto& c : out) c /= static_cast<double>(n);
    return {f.group, std::move(out)};
}

GroupFunction1D idft1(const Spectrum1D& s, TransformPath path) {
    std::vector<cd> out = dft_axis(s.coeffs, +1, path);
    std::vector<double> re(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) re[i] = out[i].real();
    return {s.group, std::move(re)};
}

Spectrum2D dft2(const GroupFunction2D& f, TransformPath path) {
    const int n = f.n();
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<cd> work(f.values.begin(), f.values.end());

    std::vector<cd> row(un);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) row[static_cast<std::size_t>(y)] = work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)];
        auto t = dft_axis(row, -1, path);
        for (int y = 0; y < n; ++y) work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = t[static_cast<std::size_t>(y)];
    }
    std::vector<cd> col(un);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) col[static_cast<std::size_t>(x)] = work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)];
        auto t = dft_axis(col, -1, path);
        for (int x = 0; x < n; ++x) work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = t[static_cast<std::size_t>(x)];
    }
    const double scale = static_cast<double>(n) * static_cast<double>(n);
    for (auto& c : work) c /= scale;
    return {f.group, std::move(work)};
}

GroupFunction2D idft2(const Spectrum2D& s, TransformPath path) {
    const int n = s.n();
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<cd> work = s.coeffs;

    std::vector<cd> row(un);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) row[static_cast<std::size_t>(y)] = work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)];
        auto t = dft_axis(row, +1, path);
        for (int y = 0; y < n; ++y) work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = t[static_cast<std::size_t>(y)];
    }
    std::vector<cd> col(un);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) col[static_cast<std::size_t>(x)] = work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)];
        auto t = dft_axis(col, +1, path);
        for (int x = 0; x < n; ++x) work[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = t[static_cast<std::size_t>(x)];
    }
    std::vector<double> re(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) re[i] = work[i].real();
    return {s.group, std::move(re)};
}

GroupFunction1D convolve1(const GroupFunction1D& u, const GroupFunction1D& v) {
    require_same_group(u.group, v.group);
    const int n = u.n();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s) {
            int d = x - s;
            if (d < 0) d += n;
            acc += u.values[static_cast<std::size_t>(d)] * v.values[static_cast<std::size_t>(s)];
        }
        out[static_cast<std::size_t>(x)] = acc / n;
    }
    return {u.group, std::move(out)};
}

GroupFunction2D convolve2_product(const GroupFunction2D& f, const GroupFunction1D& k) {
    require_same_group(f.group, k.group);
    const int n = f.n();

    // Support of the kernel; the point mass N*1_{0} acts as the exact
    // identity, so return f unchanged in that case.
    std::vector<int> supp;
    for (int x = 0; x < n; ++x)
        if (k.values[static_cast<std::size_t>(x)] != 0.0) supp.push_back(x);
    if (supp.size() == 1 && supp[0] == 0 && k.values[0] == static_cast<double>(n)) return f;

    const std::size_t un = static_cast<std::size_t>(n);
    // Pass 1: columns (y-axis): tmp(x,y) = N^-1 sum_v f(x, y-v) k(v).
    std::vector<double> tmp(un * un, 0.0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            double acc = 0.0;
            for (int v : supp) {
                int yy = y - v;
                if (yy < 0) yy += n;
                acc += f.values[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(yy)] *
                       k.values[static_cast<std::size_t>(v)];
            }
            tmp[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = acc / n;
        }
    }
    // Pass 2: rows (x-axis): out(x,y) = N^-1 sum_u tmp(x-u, y) k(u).
    std::vector<double> out(un * un, 0.0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            double acc = 0.0;
            for (int u : supp) {
                int xx = x - u;
                if (xx < 0) xx += n;
                acc += tmp[static_cast<std::size_t>(xx) * un + static_cast<std::size_t>(y)] *
                       k.values[static_cast<std::size_t>(u)];
            }
            out[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = acc / n;
        }
    }
    return {f.group, std::move(out)};
}

} // namespace isotri
