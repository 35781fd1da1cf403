#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isotri/grid_set.hpp"
#include "isotri/regularity.hpp"

namespace isotri {

/// A single difference (m,n) != (0,0) together with its configuration
/// count and the popularity threshold (alpha^3 - eps) * N^2 it is held to.
struct PopularDifferenceResult {
    int side = 0;
    double alpha = 0.0;
    double epsilon = 0.0;
    std::string method; // "scan" or "certificate"
    bool wraparound = false;
    int m = 0;
    int n = 0;
    std::int64_t count = 0;
    double threshold = 0.0;
    bool met = false;
    /// Certificate path only: the weight collapsed to the point mass at 0,
    /// so its support carried no nonzero difference and the exhaustive scan
    /// was used to produce the reported pair.
    bool support_degenerate = false;
    /// Certificate path only: lower bound on the best count implied by the
    /// certificate after the exact (0,0) mass is subtracted (absent when
    /// the weight is fully degenerate).
    std::optional<double> certificate_bound;
};

/// Exhaustive argmax over all nonzero differences. Ties break to the
/// lexicographically least (m,n). Requires side >= 2 (a 1x1 grid has no
/// nonzero difference).
PopularDifferenceResult find_popular_scan(const GridSet& a, double epsilon, bool wraparound);

/// Indicator of the grid set inside (Z/N')^2 for the smallest odd N' >= 5N;
/// the margin keeps every difference in a certificate weight's support free
/// of wraparound.
GroupFunction2D embed_to_cyclic(const GridSet& a);

struct CertifiedPopularResult {
    PopularDifferenceResult result;
    RegularityCertificate certificate;
};

/// Certificate pipeline: certify the embedded indicator, subtract the
/// exact (0,0) mass, and scan only differences in the weight's support.
/// Throws std::runtime_error when the certificate itself fails.
CertifiedPopularResult find_popular_certificate(const GridSet& a, double epsilon);

} // namespace isotri
