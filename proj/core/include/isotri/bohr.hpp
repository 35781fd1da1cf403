#pragma once

#include <vector>

#include "isotri/cyclic_group.hpp"

namespace isotri {

/// A finite set of frequencies in the dual group, kept sorted and unique.
struct FrequencySet {
    CyclicGroup group;
    std::vector<int> freqs;

    FrequencySet(CyclicGroup g, std::vector<int> f);

    bool contains(int xi) const;
    std::size_t size() const { return freqs.size(); }
    bool subset_of(const FrequencySet& other) const;
};

/// Largest frequency deviation max_{xi in S} ||xi*x/N|| for one element.
double bohr_deviation(const FrequencySet& s, int x);

/// The Bohr set B(S, rho) = {x : max_{xi in S} ||xi*x/N|| < rho}; strict
/// inequality, so 0 always belongs. rho must lie in (0, 1].
std::vector<int> bohr_set(const FrequencySet& s, double rho);

/// Tent function over a Bohr set and its autocorrelation weight:
///   nu = c * (1 - rho^-1 max_{xi in S} ||xi(x)||)_+   with mean(nu) = 1,
///   chi = nu * nu (convolution), so chi >= 0 and mean(chi) = 1.
struct BohrWeight {
    FrequencySet freqset;
    double rho;
    GroupFunction1D tent; // nu
    GroupFunction1D chi;  // nu * nu
};

BohrWeight tent(const FrequencySet& s, double rho);

/// True iff every x with chi(x) > 0 satisfies min(x, N-x) <= 2*floor(rho*N).
/// Requires the point-separating frequency 1 in S (throws otherwise): only
/// then does the Bohr set control the representative's magnitude.
bool support_check(const BohrWeight& w);

/// Exact weight the pair (s,t) = (0,0) receives in Lambda_chi: chi(0)^2/N^2.
double trivial_difference_mass(const BohrWeight& w);

} // namespace isotri
