#include "isotri/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isotri {

FrequencySet::FrequencySet(CyclicGroup g, std::vector<int> f) : group(g), freqs(std::move(f)) {
    for (int& xi : freqs) {
        xi %= group.modulus;
        if (xi < 0) xi += group.modulus;
    }
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
}

bool FrequencySet::contains(int xi) const {
    xi %= group.modulus;
    if (xi < 0) xi += group.modulus;
    return std::binary_search(freqs.begin(), freqs.end(), xi);
}

bool FrequencySet::subset_of(const FrequencySet& other) const {
    return std::includes(other.freqs.begin(), other.freqs.end(), freqs.begin(), freqs.end());
}

double bohr_deviation(const FrequencySet& s, int x) {
    double m = 0.0;
    for (int xi : s.freqs)
        m = std::max(m, norm_rz(static_cast<std::int64_t>(xi) * x, s.group.modulus));
    return m;
}

std::vector<int> bohr_set(const FrequencySet& s, double rho) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("Bohr radius must lie in (0, 1]");
    std::vector<int> out;
    for (int x = 0; x < s.group.modulus; ++x)
        if (bohr_deviation(s, x) < rho) out.push_back(x);
    return out;
}

BohrWeight tent(const FrequencySet& s, double rho) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("Bohr radius must lie in (0, 1]");
    const int n = s.group.modulus;

    std::vector<double> nu(static_cast<std::size_t>(n), 0.0);
    double sum = 0.0;
    for (int x = 0; x < n; ++x) {
        const double v = 1.0 - bohr_deviation(s, x) / rho;
        if (v > 0.0) {
            nu[static_cast<std::size_t>(x)] = v;
            sum += v;
        }
    }
    // sum >= tent(0) = 1, so the rescale to mean 1 is always defined.
    const double scale = static_cast<double>(n) / sum;
    for (double& v : nu) v *= scale;

    GroupFunction1D tent_fn{s.group, std::move(nu)};
    GroupFunction1D chi = convolve1(tent_fn, tent_fn);
    return BohrWeight{s, rho, std::move(tent_fn), std::move(chi)};
}

bool support_check(const BohrWeight& w) {
    if (!w.freqset.contains(1))
        throw std::invalid_argument(
            "support check requires the point-separating frequency 1 in the frequency set");
    const int n = w.freqset.group.modulus;
    const auto bound = static_cast<std::int64_t>(2.0 * std::floor(w.rho * n));
    for (int x = 0; x < n; ++x) {
        if (w.chi.values[static_cast<std::size_t>(x)] > 0.0 &&
            std::min<std::int64_t>(x, n - x) > bound)
            return false;
    }
    return true;
}

double trivial_difference_mass(const BohrWeight& w) {
    const double n = w.freqset.group.modulus;
    const double c0 = w.chi.values[0];
    return (c0 * c0) / (n * n);
}

} // namespace isotri
