#pragma once

#include <cstdint>
#include <vector>

#include "isotri/bohr.hpp"
#include "isotri/counting_forms.hpp"
#include "isotri/cyclic_group.hpp"

namespace isotri {

/// Iteration budget and base radius derived from the target accuracy.
struct RegularityParams {
    double epsilon;      // in (0, 1]
    std::int64_t max_levels; // 2*floor(1e4/eps^2) + 4
    double delta0;       // eps/1e4

    static RegularityParams from_epsilon(double epsilon);
};

/// One level of the frequency tower: the frequency set S_i, the radius
/// triple attached to it, and the two tents built from it. Radii decrease
/// strictly along the tower; each set contains its predecessor.
struct TowerLevel {
    int index;
    FrequencySet freqs;
    std::vector<std::uint8_t> membership; // indicator of freqs over [0, N)

    double tent_radius;     // radius of the smoothing tent at this level
    double cert_radius;     // candidate certificate radius (rho if selected)
    double coeff_threshold; // spectrum cutoff feeding the next level

    BohrWeight smoothing;   // tent at tent_radius
    BohrWeight cert_weight; // tent at cert_radius; its chi is the certificate weight
};

struct Tower {
    RegularityParams params;
    Spectrum2D spectrum; // of the analyzed function
    std::vector<TowerLevel> levels;
};

/// Spectral energy in the shell S_{i+2}^2 \ S_i^2.
double shell_energy(const Tower& tower, int index);

/// Build the tower for f (values in [0,1], odd modulus), stopping at the
/// first index whose shell energy drops below eps^2/1e4. The returned
/// tower holds levels 0..i+2 for that index. Throws std::invalid_argument
/// for even modulus or out-of-range values, std::logic_error if the
/// energy pigeonhole fails within the level budget (impossible if the
/// radius rules are implemented correctly).
Tower build_tower(const GroupFunction2D& f, const RegularityParams& params);

/// Smallest index whose shell energy is within budget.
int select_index(const Tower& tower, const RegularityParams& params);

/// Three-part split at tower index i:
///   smooth = f * (nu_i x nu_i)
///   mid    = f * (nu_{i+1} x nu_{i+1}) - smooth
///   rough  = f - f * (nu_{i+1} x nu_{i+1})
/// so smooth + mid + rough = f, smooth stays in [0,1], the others in [-1,1].
struct Decomposition {
    GroupFunction2D smooth;
    GroupFunction2D mid;
    GroupFunction2D rough;
};

Decomposition decompose(const GroupFunction2D& f, const Tower& tower, int index);

/// Verified lower-bound certificate: Lambda_chi(f,f,f) >= mean(f)^3 - eps
/// for the weight chi built from the selected tower level, together with
/// the four internal bounds that drive the 27-term estimate.
struct RegularityCertificate {
    double epsilon = 0.0;
    int modulus = 0;
    int index = 0;
    FrequencySet freqs;
    double rho = 0.0;
    double realized_r = 0.0; // max(|S|, 1/rho) for this run

    Decomposition parts;
    BohrWeight weight;

    double lambda_value = 0.0;        // frequency-side evaluation
    double lambda_direct_check = 0.0; // direct-sum cross-check
    double mean_value = 0.0;
    double mean_cubed = 0.0;

    BoundCheck shell_energy;     // pigeonhole shell <= eps^2/1e4
    BoundCheck rough_sup;        // ||rough^||_inf <= 2 * coeff_threshold
    BoundCheck mid_l2;           // ||mid||_2 <= eps/27
    BoundCheck smooth_shift_sup; // shift modulus of smooth <= eps/54

    bool bounds_pass = false;
    bool pass = false; // lambda_value >= mean_cubed - epsilon
};

RegularityCertificate certify(const GroupFunction2D& f, const RegularityParams& params);

} // namespace isotri
