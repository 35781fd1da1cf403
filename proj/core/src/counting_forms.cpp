#include "isotri/counting_forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "isotri/parallel.hpp"

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

int mod(int v, int n) {
    int r = v % n;
    return r < 0 ? r + n : r;
}

// ---- packed row kernels -------------------------------------------------
// A row is an N-bit little-endian integer over `w` 64-bit words.

void row_shift_down(const std::uint64_t* src, std::uint64_t* dst, int w, int k) {
    const int ws = k / 64, bs = k % 64;
    for (int i = 0; i < w; ++i) {
        const std::uint64_t lo = (i + ws < w) ? src[i + ws] : 0;
        const std::uint64_t hi = (i + ws + 1 < w) ? src[i + ws + 1] : 0;
        dst[i] = bs == 0 ? lo : (lo >> bs) | (hi << (64 - bs));
    }
}

void row_shift_up(const std::uint64_t* src, std::uint64_t* dst, int w, int k, int nbits) {
    const int ws = k / 64, bs = k % 64;
    for (int i = w - 1; i >= 0; --i) {
        const std::uint64_t lo = (i - ws >= 0) ? src[i - ws] : 0;
        const std::uint64_t lo2 = (i - ws - 1 >= 0) ? src[i - ws - 1] : 0;
        dst[i] = bs == 0 ? lo : (lo << bs) | (lo2 >> (64 - bs));
    }
    const int rem = nbits % 64;
    if (rem != 0) dst[w - 1] &= (std::uint64_t{1} << rem) - 1;
}

/// bit b of dst = bit (b+k) of src, zero fill; k may be negative or exceed
/// the row width, in which case dst is all zero.
void row_shift_signed(const std::uint64_t* src, std::uint64_t* dst, int w, int k, int nbits) {
    if (k >= nbits || k <= -nbits) {
        std::fill(dst, dst + w, 0);
        return;
    }
    if (k >= 0)
        row_shift_down(src, dst, w, k);
    else
        row_shift_up(src, dst, w, -k, nbits);
}

/// bit b of dst = bit ((b+k) mod nbits) of src, k in [0, nbits).
void row_rotate_down(const std::uint64_t* src, std::uint64_t* dst, std::uint64_t* scratch,
                     int w, int k, int nbits) {
    if (k == 0) {
        std::copy(src, src + w, dst);
        return;
    }
    row_shift_down(src, dst, w, k);
    row_shift_up(src, scratch, w, nbits - k, nbits);
    for (int i = 0; i < w; ++i) dst[i] |= scratch[i];
}

std::int64_t packed_count_wrap(const GridSet& a, int m, int n,
                               std::vector<std::uint64_t>& buf) {
    const int N = a.side(), w = a.words_per_row();
    std::uint64_t* r1 = buf.data();
    std::uint64_t* r2 = buf.data() + w;
    std::uint64_t* scratch = buf.data() + 2 * w;
    const int nk = mod(n, N), mk = mod(m, N);
    std::int64_t acc = 0;
    for (int x = 0; x < N; ++x) {
        const std::uint64_t* r0 = a.row(x);
        row_rotate_down(a.row(mod(x + m, N)), r1, scratch, w, nk, N);
        row_rotate_down(a.row(mod(x - n, N)), r2, scratch, w, mk, N);
        for (int i = 0; i < w; ++i) acc += std::popcount(r0[i] & r1[i] & r2[i]);
    }
    return acc;
}

std::int64_t packed_count_grid(const GridSet& a, int m, int n,
                               std::vector<std::uint64_t>& buf) {
    const int N = a.side(), w = a.words_per_row();
    std::uint64_t* r1 = buf.data();
    std::uint64_t* r2 = buf.data() + w;
    std::int64_t acc = 0;
    for (int x = 0; x < N; ++x) {
        const int xm = x + m, xn = x - n;
        if (xm < 0 || xm >= N || xn < 0 || xn >= N) continue;
        const std::uint64_t* r0 = a.row(x);
        row_shift_signed(a.row(xm), r1, w, n, N);
        row_shift_signed(a.row(xn), r2, w, m, N);
        for (int i = 0; i < w; ++i) acc += std::popcount(r0[i] & r1[i] & r2[i]);
    }
    return acc;
}

std::int64_t scalar_count(const GridSet& a, int m, int n, bool wraparound) {
    const int N = a.side();
    std::int64_t acc = 0;
    if (wraparound) {
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y)
                if (a.test(x, y) && a.test(mod(x + m, N), mod(y + n, N)) &&
                    a.test(mod(x - n, N), mod(y + m, N)))
                    ++acc;
    } else {
        for (int x = 0; x < N; ++x) {
            for (int y = 0; y < N; ++y) {
                const int x2 = x + m, y2 = y + n, x3 = x - n, y3 = y + m;
                if (x2 < 0 || x2 >= N || y2 < 0 || y2 >= N) continue;
                if (x3 < 0 || x3 >= N || y3 < 0 || y3 >= N) continue;
                if (a.test(x, y) && a.test(x2, y2) && a.test(x3, y3)) ++acc;
            }
        }
    }
    return acc;
}

} // namespace

double l1_norm(const GroupFunction1D& f) {
    double s = 0.0;
    for (double v : f.values) s += std::abs(v);
    return s / f.n();
}

double l1_norm(const GroupFunction2D& f) {
    double s = 0.0;
    for (double v : f.values) s += std::abs(v);
    return s / (static_cast<double>(f.n()) * static_cast<double>(f.n()));
}

double l2_norm(const GroupFunction1D& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s / f.n());
}

double l2_norm(const GroupFunction2D& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s / (static_cast<double>(f.n()) * static_cast<double>(f.n())));
}

double linf_norm(const GroupFunction1D& f) {
    double s = 0.0;
    for (double v : f.values) s = std::max(s, std::abs(v));
    return s;
}

double linf_norm(const GroupFunction2D& f) {
    double s = 0.0;
    for (double v : f.values) s = std::max(s, std::abs(v));
    return s;
}

double spectral_sup(const Spectrum2D& s) {
    double m = 0.0;
    for (const auto& c : s.coeffs) m = std::max(m, std::abs(c));
    return m;
}

double spectral_l1(const Spectrum1D& s) {
    double sum = 0.0;
    for (const auto& c : s.coeffs) sum += std::abs(c);
    return sum;
}

double lambda_direct(const GroupFunction2D& f, const GroupFunction2D& g,
                     const GroupFunction2D& h, const GroupFunction1D& chi) {
    require_same_group(f.group, g.group);
    require_same_group(f.group, h.group);
    require_same_group(f.group, chi.group);
    const int N = f.n();

    std::vector<int> supp;
    for (int s = 0; s < N; ++s)
        if (chi.values[static_cast<std::size_t>(s)] != 0.0) supp.push_back(s);

    // Per-x partial sums; the final reduction runs sequentially in x order
    // so the result does not depend on the worker count.
    std::vector<double> partial(static_cast<std::size_t>(N), 0.0);
    parallel_for(N, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t x = begin; x < end; ++x) {
            double acc = 0.0;
            for (int y = 0; y < N; ++y) {
                const double fv = f.at(static_cast<int>(x), y);
                if (fv == 0.0) continue;
                for (int s : supp) {
                    const double cs = chi.values[static_cast<std::size_t>(s)];
                    const int xs = mod(static_cast<int>(x) + s, N);
                    const int ys2 = mod(y + s, N);
                    for (int t : supp) {
                        const double ct = chi.values[static_cast<std::size_t>(t)];
                        acc += fv * g.at(xs, mod(y + t, N)) *
                               h.at(mod(static_cast<int>(x) - t, N), ys2) * cs * ct;
                    }
                }
            }
            partial[static_cast<std::size_t>(x)] = acc;
        }
    });
    double total = 0.0;
    for (double p : partial) total += p;
    const double n4 = static_cast<double>(N) * N * N * N;
    return total / n4;
}

std::complex<double> lambda_fourier_weighted_full(const GroupFunction2D& f,
                                                  const GroupFunction2D& g,
                                                  const GroupFunction2D& h,
                                                  const GroupFunction1D& chi) {
    require_same_group(f.group, g.group);
    require_same_group(f.group, h.group);
    require_same_group(f.group, chi.group);
    const int N = f.n();

    const Spectrum2D fh = dft2(f);
    const Spectrum2D gh = dft2(g);
    const Spectrum2D hh = dft2(h);
    const Spectrum1D ch = dft1(chi);

    std::vector<cd> partial(static_cast<std::size_t>(N), cd{0.0, 0.0});
    parallel_for(N, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t xi = begin; xi < end; ++xi) {
            cd acc{0.0, 0.0};
            for (int zeta = 0; zeta < N; ++zeta) {
                const cd gv = gh.at(static_cast<int>(xi), zeta);
                if (gv == cd{0.0, 0.0}) continue;
                for (int xip = 0; xip < N; ++xip) {
                    const cd cb = ch.at(mod(-zeta + xip, N));
                    for (int zetap = 0; zetap < N; ++zetap) {
                        acc += fh.at(mod(-static_cast<int>(xi) - xip, N), mod(-zeta - zetap, N)) *
                               gv * hh.at(xip, zetap) *
                               ch.at(mod(-static_cast<int>(xi) - zetap, N)) * cb;
                    }
                }
            }
            partial[static_cast<std::size_t>(xi)] = acc;
        }
    });
    cd total{0.0, 0.0};
    for (const cd& p : partial) total += p;
    return total;
}

double lambda_fourier_weighted(const GroupFunction2D& f, const GroupFunction2D& g,
                               const GroupFunction2D& h, const GroupFunction1D& chi) {
    return lambda_fourier_weighted_full(f, g, h, chi).real();
}

double lambda_fourier_unweighted(const GroupFunction2D& f, const GroupFunction2D& g,
                                 const GroupFunction2D& h) {
    require_same_group(f.group, g.group);
    require_same_group(f.group, h.group);
    const int N = f.n();

    const Spectrum2D fh = dft2(f);
    const Spectrum2D gh = dft2(g);
    const Spectrum2D hh = dft2(h);

    cd acc{0.0, 0.0};
    for (int xi = 0; xi < N; ++xi)
        for (int zeta = 0; zeta < N; ++zeta)
            acc += fh.at(mod(-xi - zeta, N), mod(xi - zeta, N)) * gh.at(xi, zeta) *
                   hh.at(zeta, mod(-xi, N));
    return acc.real();
}

DifferenceCounts::DifferenceCounts(int side, bool wraparound)
    : side_(side),
      wraparound_(wraparound),
      span_(wraparound ? side : 2 * side - 1),
      counts_(static_cast<std::size_t>(span_) * static_cast<std::size_t>(span_), 0) {
    if (side < 1) throw std::invalid_argument("grid side must be >= 1");
}

std::size_t DifferenceCounts::index_of(int m, int n) const {
    int i, j;
    if (wraparound_) {
        i = mod(m, side_);
        j = mod(n, side_);
    } else {
        if (m <= -side_ || m >= side_ || n <= -side_ || n >= side_)
            throw std::out_of_range("difference (" + std::to_string(m) + "," + std::to_string(n) +
                                    ") outside grid range");
        i = m + side_ - 1;
        j = n + side_ - 1;
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(span_) +
           static_cast<std::size_t>(j);
}

std::int64_t DifferenceCounts::at(int m, int n) const { return counts_[index_of(m, n)]; }

std::int64_t& DifferenceCounts::slot(int m, int n) { return counts_[index_of(m, n)]; }

std::int64_t DifferenceCounts::total() const {
    std::int64_t s = 0;
    for (std::int64_t c : counts_) s += c;
    return s;
}

std::vector<DifferenceCounts::Entry> DifferenceCounts::entries() const {
    std::vector<Entry> out;
    out.reserve(counts_.size());
    const int lo = wraparound_ ? 0 : -(side_ - 1);
    const int hi = wraparound_ ? side_ - 1 : side_ - 1;
    for (int m = lo; m <= hi; ++m)
        for (int n = lo; n <= hi; ++n) out.push_back({m, n, at(m, n)});
    return out;
}

DifferenceCounts difference_counts(const GridSet& a, bool wraparound, CountKernel kernel) {
    const int N = a.side();
    DifferenceCounts out(N, wraparound);
    const int lo = wraparound ? 0 : -(N - 1);
    const int span = wraparound ? N : 2 * N - 1;
    const std::int64_t pairs = static_cast<std::int64_t>(span) * span;

    parallel_for(pairs, [&](std::int64_t begin, std::int64_t end) {
        std::vector<std::uint64_t> buf(static_cast<std::size_t>(3 * a.words_per_row()));
        for (std::int64_t p = begin; p < end; ++p) {
            const int m = lo + static_cast<int>(p / span);
            const int n = lo + static_cast<int>(p % span);
            std::int64_t c;
            if (kernel == CountKernel::kPacked)
                c = wraparound ? packed_count_wrap(a, m, n, buf) : packed_count_grid(a, m, n, buf);
            else
                c = scalar_count(a, m, n, wraparound);
            out.slot(m, n) = c;
        }
    });
    return out;
}

std::int64_t difference_count_at(const GridSet& a, int m, int n, bool wraparound) {
    std::vector<std::uint64_t> buf(static_cast<std::size_t>(3 * a.words_per_row()));
    if (wraparound) return packed_count_wrap(a, m, n, buf);
    if (m <= -a.side() || m >= a.side() || n <= -a.side() || n >= a.side()) return 0;
    return packed_count_grid(a, m, n, buf);
}

namespace {

BoundCheck make_check(std::string name, double lhs, double rhs) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    // Tolerance for roundoff in the two independently computed sides.
    c.pass = lhs <= rhs + 1e-9;
    return c;
}

InequalityReport finalize(double lambda, std::vector<BoundCheck> checks) {
    InequalityReport r;
    r.lambda = lambda;
    r.checks = std::move(checks);
    r.all_pass = std::all_of(r.checks.begin(), r.checks.end(),
                             [](const BoundCheck& c) { return c.pass; });
    return r;
}

} // namespace

InequalityReport check_uniformity_bound(const GroupFunction2D& f, const GroupFunction2D& g,
                                        const GroupFunction2D& h) {
    require_same_group(f.group, g.group);
    require_same_group(f.group, h.group);
    if (!f.group.two_divisible())
        throw std::invalid_argument("uniformity bound needs odd modulus (doubling must be onto)");

    const double lambda = lambda_fourier_unweighted(f, g, h);
    const double sup_f = spectral_sup(dft2(f));
    const double sup_g = spectral_sup(dft2(g));
    const double sup_h = spectral_sup(dft2(h));
    const double rhs = std::min({sup_f, sup_g, sup_h});
    return finalize(lambda, {make_check("uniformity", std::abs(lambda), rhs)});
}

InequalityReport check_lest2(const GroupFunction2D& f, const GroupFunction2D& g,
                             const GroupFunction2D& h, const GroupFunction1D& chi) {
    const double lambda = lambda_fourier_weighted(f, g, h, chi);
    const double lhs = std::abs(lambda);
    const double chi_l1_sq = [&] {
        const double v = spectral_l1(dft1(chi));
        return v * v;
    }();

    std::vector<BoundCheck> checks;
    checks.push_back(make_check("sup_slot_f",
                                lhs, spectral_sup(dft2(f)) * l2_norm(g) * l2_norm(h) * chi_l1_sq));
    if (f.group.two_divisible()) {
        checks.push_back(make_check(
            "sup_slot_g", lhs, spectral_sup(dft2(g)) * l2_norm(f) * l2_norm(h) * chi_l1_sq));
        checks.push_back(make_check(
            "sup_slot_h", lhs, spectral_sup(dft2(h)) * l2_norm(f) * l2_norm(g) * chi_l1_sq));
    }
    return finalize(lambda, std::move(checks));
}

InequalityReport check_lest3(const GroupFunction2D& f, const GroupFunction2D& g,
                             const GroupFunction2D& h, const GroupFunction1D& chi) {
    const double lambda = lambda_direct(f, g, h, chi);
    const double lhs = std::abs(lambda);
    const double chi_l1_sq = l1_norm(chi) * l1_norm(chi);

    std::vector<BoundCheck> checks;
    checks.push_back(
        make_check("l1_slot_f", lhs, l1_norm(f) * linf_norm(g) * linf_norm(h) * chi_l1_sq));
    if (f.group.two_divisible()) {
        checks.push_back(
            make_check("l1_slot_g", lhs, l1_norm(g) * linf_norm(f) * linf_norm(h) * chi_l1_sq));
        checks.push_back(
            make_check("l1_slot_h", lhs, l1_norm(h) * linf_norm(f) * linf_norm(g) * chi_l1_sq));
    }
    return finalize(lambda, std::move(checks));
}

} // namespace isotri
