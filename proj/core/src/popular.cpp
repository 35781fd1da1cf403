#include "isotri/popular.hpp"

#include <stdexcept>

#include "isotri/counting_forms.hpp"

namespace isotri {

namespace {

double popularity_threshold(const GridSet& a, double epsilon) {
    const double alpha = a.density();
    const double n2 = static_cast<double>(a.side()) * static_cast<double>(a.side());
    return (alpha * alpha * alpha - epsilon) * n2;
}

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1]");
}

struct BestPair {
    bool any = false;
    int m = 0, n = 0;
    std::int64_t count = -1;

    void offer(int mm, int nn, std::int64_t c) {
        if (!any || c > count || (c == count && std::make_pair(mm, nn) < std::make_pair(m, n))) {
            any = true;
            m = mm;
            n = nn;
            count = c;
        }
    }
};

} // namespace

PopularDifferenceResult find_popular_scan(const GridSet& a, double epsilon, bool wraparound) {
    require_epsilon(epsilon);
    if (a.side() < 2)
        throw std::invalid_argument("popular-difference scan needs grid side >= 2");

    const DifferenceCounts counts = difference_counts(a, wraparound);
    BestPair best;
    for (const auto& e : counts.entries()) {
        if (e.m == 0 && e.n == 0) continue;
        best.offer(e.m, e.n, e.count);
    }

    PopularDifferenceResult r;
    r.side = a.side();
    r.alpha = a.density();
    r.epsilon = epsilon;
    r.method = "scan";
    r.wraparound = wraparound;
    r.m = best.m;
    r.n = best.n;
    r.count = best.count;
    r.threshold = popularity_threshold(a, epsilon);
    r.met = static_cast<double>(r.count) >= r.threshold;
    return r;
}

GroupFunction2D embed_to_cyclic(const GridSet& a) {
    int np = 5 * a.side();
    if (np % 2 == 0) ++np;
    GroupFunction2D f = GroupFunction2D::constant(CyclicGroup{np}, 0.0);
    for (const auto& [r, c] : a.points()) f.at(r, c) = 1.0;
    return f;
}

CertifiedPopularResult find_popular_certificate(const GridSet& a, double epsilon) {
    require_epsilon(epsilon);
    if (a.side() < 2)
        throw std::invalid_argument("popular-difference pipeline needs grid side >= 2");

    const int side = a.side();
    GroupFunction2D f = embed_to_cyclic(a);
    const int np = f.n();

    RegularityCertificate cert = certify(f, RegularityParams::from_epsilon(epsilon));
    if (!cert.pass)
        throw std::runtime_error("regularity certificate failed: lambda " +
                                 std::to_string(cert.lambda_value) + " < mean^3 - eps = " +
                                 std::to_string(cert.mean_cubed - cert.epsilon));

    // Support of the weight as signed differences; the embedding margin
    // must keep the grid plus any supported shift inside one period.
    std::vector<int> signed_support;
    int max_shift = 0;
    for (int s = 0; s < np; ++s) {
        if (cert.weight.chi.values[static_cast<std::size_t>(s)] > 0.0) {
            const int v = s <= np / 2 ? s : s - np;
            signed_support.push_back(v);
            max_shift = std::max(max_shift, std::abs(v));
        }
    }
    if (!support_check(cert.weight) || side + 2 * max_shift > np)
        throw std::logic_error("certificate weight support leaks around the embedding margin");

    BestPair best;
    for (int m : signed_support) {
        if (m <= -side || m >= side) continue;
        for (int n : signed_support) {
            if (n <= -side || n >= side) continue;
            if (m == 0 && n == 0) continue;
            best.offer(m, n, difference_count_at(a, m, n, /*wraparound=*/false));
        }
    }

    PopularDifferenceResult r;
    r.side = side;
    r.alpha = a.density();
    r.epsilon = epsilon;
    r.method = "certificate";
    r.wraparound = false;
    r.threshold = popularity_threshold(a, epsilon);

    const double trivial_mass = trivial_difference_mass(cert.weight);
    if (trivial_mass < 1.0) {
        const double np2 = static_cast<double>(np) * static_cast<double>(np);
        const double trivial_term =
            trivial_mass * static_cast<double>(a.cardinality()) / np2;
        r.certificate_bound =
            (cert.lambda_value - trivial_term) * np2 / (1.0 - trivial_mass);
    }

    if (!best.any) {
        // Weight support reduced to {0}: the certificate pins no usable
        // difference, so fall back to the exhaustive grid scan.
        r.support_degenerate = true;
        const DifferenceCounts counts = difference_counts(a, /*wraparound=*/false);
        for (const auto& e : counts.entries()) {
            if (e.m == 0 && e.n == 0) continue;
            best.offer(e.m, e.n, e.count);
        }
    }
    r.m = best.m;
    r.n = best.n;
    r.count = best.count;
    r.met = static_cast<double>(r.count) >= r.threshold;
    return CertifiedPopularResult{std::move(r), std::move(cert)};
}

} // namespace isotri
