#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isotri/cyclic_group.hpp"
#include "isotri/grid_set.hpp"

namespace isotri {

// Norms against the probability measure (L^p) and over raw frequencies (l^p).
double l1_norm(const GroupFunction1D& f);
double l1_norm(const GroupFunction2D& f);
double l2_norm(const GroupFunction1D& f);
double l2_norm(const GroupFunction2D& f);
double linf_norm(const GroupFunction1D& f);
double linf_norm(const GroupFunction2D& f);
double spectral_sup(const Spectrum2D& s);
double spectral_l1(const Spectrum1D& s);

/// Weighted triangle-counting form
///   Lambda_chi(f,g,h) = N^-4 sum_{x,y,s,t} f(x,y) g(x+s,y+t) h(x-t,y+s) chi(s) chi(t),
/// evaluated by direct summation over the (exact) support of chi.
/// Throws std::invalid_argument on mismatched moduli.
double lambda_direct(const GroupFunction2D& f, const GroupFunction2D& g,
                     const GroupFunction2D& h, const GroupFunction1D& chi);

/// Same value through the frequency side:
///   sum f^(-xi-xi', -zeta-zeta') g^(xi,zeta) h^(xi',zeta') chi^(-xi-zeta') chi^(-zeta+xi').
/// The imaginary part is a numerical residual for real inputs; callers can
/// inspect it via lambda_fourier_weighted_full.
double lambda_fourier_weighted(const GroupFunction2D& f, const GroupFunction2D& g,
                               const GroupFunction2D& h, const GroupFunction1D& chi);
std::complex<double> lambda_fourier_weighted_full(const GroupFunction2D& f,
                                                  const GroupFunction2D& g,
                                                  const GroupFunction2D& h,
                                                  const GroupFunction1D& chi);

/// Constant-weight specialization:
///   sum_{xi,zeta} f^(-xi-zeta, xi-zeta) g^(xi,zeta) h^(zeta,-xi).
double lambda_fourier_unweighted(const GroupFunction2D& f, const GroupFunction2D& g,
                                 const GroupFunction2D& h);

/// Per-difference configuration counts
///   counts(m,n) = #{(a,b) : (a,b), (a+m,b+n), (a-n,b+m) all in A}.
/// Wraparound: coordinates mod N, (m,n) in [0,N)^2. Plain grid: integer
/// coordinates, out-of-range points exclude the triple, (m,n) in
/// [-(N-1), N-1]^2.
class DifferenceCounts {
public:
    DifferenceCounts(int side, bool wraparound);

    int side() const { return side_; }
    bool wraparound() const { return wraparound_; }

    std::int64_t at(int m, int n) const;
    std::int64_t& slot(int m, int n);
    std::int64_t total() const;

    /// All (m, n, count) entries in lexicographic (m, n) order.
    struct Entry {
        int m, n;
        std::int64_t count;
    };
    std::vector<Entry> entries() const;

private:
    std::size_t index_of(int m, int n) const;

    int side_;
    bool wraparound_;
    int span_; // N for wraparound, 2N-1 otherwise
    std::vector<std::int64_t> counts_;
};

enum class CountKernel { kPacked, kScalar };

/// Full table of per-difference counts. The packed kernel shifts and
/// intersects word-packed rows (popcount per word); the scalar kernel is
/// the O(N^4) reference path kept as its oracle.
DifferenceCounts difference_counts(const GridSet& a, bool wraparound,
                                   CountKernel kernel = CountKernel::kPacked);

/// Count for a single difference without building the table.
std::int64_t difference_count_at(const GridSet& a, int m, int n, bool wraparound);

/// One verified inequality: lhs <= rhs with slack = rhs - lhs.
struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double slack = 0.0;
};

struct InequalityReport {
    double lambda = 0.0;
    std::vector<BoundCheck> checks;
    bool all_pass = false;
};

/// |Lambda_1(f,g,h)| <= min of the three spectral sup-norms, for
/// [-1,1]-valued functions on a group of odd order. Throws
/// std::invalid_argument when N is even (the doubling map must be onto).
InequalityReport check_uniformity_bound(const GroupFunction2D& f, const GroupFunction2D& g,
                                        const GroupFunction2D& h);

/// |Lambda_chi(f,g,h)| <= ||f^||_inf ||g||_2 ||h||_2 ||chi^||_1^2, plus the
/// sup-norm moved to the g and h slots when N is odd.
InequalityReport check_lest2(const GroupFunction2D& f, const GroupFunction2D& g,
                             const GroupFunction2D& h, const GroupFunction1D& chi);

/// |Lambda_chi(f,g,h)| <= ||f||_1 ||g||_inf ||h||_inf ||chi||_1^2, plus the
/// L^1 norm moved to the g and h slots when N is odd.
InequalityReport check_lest3(const GroupFunction2D& f, const GroupFunction2D& g,
                             const GroupFunction2D& h, const GroupFunction1D& chi);

} // namespace isotri
