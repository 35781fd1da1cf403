#include "isotri/regularity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isotri {

namespace {

constexpr double kTentSpectrumCut = 1.0 / 100.0; // threshold factor for |nu^|
constexpr double kEnergyBudgetFactor = 1.0 / 1e4; // eps^2/1e4 shell budget

void require_unit_range(const GroupFunction2D& f) {
    for (double v : f.values)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("function values must lie in [0, 1]");
}

std::vector<std::uint8_t> membership_of(const FrequencySet& s) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(s.group.modulus), 0);
    for (int xi : s.freqs) m[static_cast<std::size_t>(xi)] = 1;
    return m;
}

/// Radius guard: the tower is mathematically guaranteed to terminate long
/// before double precision runs out; hitting this indicates a rule bug.
void require_radius(double delta) {
    if (!(delta > 1e-300))
        throw std::logic_error("tower radius underflowed double precision");
}

TowerLevel make_level(int index, FrequencySet freqs, double tent_radius, double epsilon) {
    require_radius(tent_radius);
    BohrWeight smoothing = tent(freqs, tent_radius);

    // Lipschitz constant of the product-tent difference bound; drives how
    // small the certificate radius must be for the shift-modulus estimate.
    const double sup = linf_norm(smoothing.tent);
    const double lipschitz = sup * sup / tent_radius;
    double cert_radius =
        tent_radius * epsilon / (400.0 * (static_cast<double>(freqs.size()) + 1.0) * lipschitz);
    require_radius(cert_radius);

    BohrWeight cert_weight = tent(freqs, cert_radius);

    // Keep the rough-part terms of the final split below eps/27:
    // 2 * threshold * ||nu_cert||_2^4 <= eps/27.
    const double l2 = l2_norm(cert_weight.tent);
    double coeff_threshold = std::min(cert_radius, epsilon / (54.0 * l2 * l2 * l2 * l2));
    if (coeff_threshold >= cert_radius) coeff_threshold = cert_radius / 2.0;
    require_radius(coeff_threshold);

    TowerLevel level{index, freqs, membership_of(freqs), tent_radius, cert_radius,
                     coeff_threshold, std::move(smoothing), std::move(cert_weight)};
    return level;
}

FrequencySet next_frequency_set(const TowerLevel& level, const Spectrum2D& fhat,
                                double epsilon) {
    const int n = level.freqs.group.modulus;
    std::vector<std::uint8_t> keep = level.membership;

    const Spectrum1D nu_hat = dft1(level.smoothing.tent);
    const double tent_cut = epsilon * kTentSpectrumCut;
    for (int xi = 0; xi < n; ++xi)
        if (std::abs(nu_hat.at(xi)) >= tent_cut) keep[static_cast<std::size_t>(xi)] = 1;

    for (int xi = 0; xi < n; ++xi) {
        for (int zeta = 0; zeta < n; ++zeta) {
            if (std::abs(fhat.at(xi, zeta)) >= level.coeff_threshold) {
                keep[static_cast<std::size_t>(xi)] = 1;
                keep[static_cast<std::size_t>(zeta)] = 1;
            }
        }
    }

    std::vector<int> freqs;
    for (int xi = 0; xi < n; ++xi)
        if (keep[static_cast<std::size_t>(xi)]) freqs.push_back(xi);
    return FrequencySet{level.freqs.group, std::move(freqs)};
}

} // namespace

RegularityParams RegularityParams::from_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    RegularityParams p;
    p.epsilon = epsilon;
    p.max_levels = 2 * static_cast<std::int64_t>(std::floor(1e4 / (epsilon * epsilon))) + 4;
    p.delta0 = epsilon / 1e4;
    return p;
}

double shell_energy(const Tower& tower, int index) {
    const auto& inner = tower.levels.at(static_cast<std::size_t>(index)).membership;
    const auto& outer = tower.levels.at(static_cast<std::size_t>(index) + 2).membership;
    const int n = tower.spectrum.n();
    double energy = 0.0;
    for (int xi = 0; xi < n; ++xi) {
        for (int zeta = 0; zeta < n; ++zeta) {
            const bool in_outer = outer[static_cast<std::size_t>(xi)] && outer[static_cast<std::size_t>(zeta)];
            if (!in_outer) continue;
            const bool in_inner = inner[static_cast<std::size_t>(xi)] && inner[static_cast<std::size_t>(zeta)];
            if (in_inner) continue;
            energy += std::norm(tower.spectrum.at(xi, zeta));
        }
    }
    return energy;
}

Tower build_tower(const GroupFunction2D& f, const RegularityParams& params) {
    if (!f.group.two_divisible())
        throw std::invalid_argument("tower construction needs odd modulus (doubling must be onto)");
    require_unit_range(f);

    Tower tower{params, dft2(f), {}};
    const double budget = params.epsilon * params.epsilon * kEnergyBudgetFactor;

    FrequencySet freqs{f.group, {0, 1 % f.group.modulus}};
    double tent_radius = params.delta0;
    for (std::int64_t k = 0;; ++k) {
        tower.levels.push_back(make_level(static_cast<int>(k), freqs, tent_radius, params.epsilon));
        const TowerLevel& level = tower.levels.back();
        if (k >= 2 && shell_energy(tower, static_cast<int>(k) - 2) <= budget) break;
        if (k >= params.max_levels)
            throw std::logic_error("energy pigeonhole failed within the level budget");
        freqs = next_frequency_set(level, tower.spectrum, params.epsilon);
        tent_radius = level.coeff_threshold / (4.0 * std::numbers::pi);
    }
    return tower;
}

int select_index(const Tower& tower, const RegularityParams& params) {
    const double budget = params.epsilon * params.epsilon * kEnergyBudgetFactor;
    for (int i = 0; i + 2 < static_cast<int>(tower.levels.size()); ++i)
        if (shell_energy(tower, i) <= budget) return i;
    throw std::logic_error("no admissible pigeonhole index in the built tower");
}

Decomposition decompose(const GroupFunction2D& f, const Tower& tower, int index) {
    const TowerLevel& lo = tower.levels.at(static_cast<std::size_t>(index));
    const TowerLevel& hi = tower.levels.at(static_cast<std::size_t>(index) + 1);

    GroupFunction2D smooth = convolve2_product(f, lo.smoothing.tent);
    GroupFunction2D smoother = convolve2_product(f, hi.smoothing.tent);

    GroupFunction2D mid = smoother;
    GroupFunction2D rough = f;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        mid.values[i] -= smooth.values[i];
        rough.values[i] -= smoother.values[i];
    }
    return Decomposition{std::move(smooth), std::move(mid), std::move(rough)};
}

RegularityCertificate certify(const GroupFunction2D& f, const RegularityParams& params) {
    Tower tower = build_tower(f, params);
    const int index = select_index(tower, params);
    const TowerLevel& level = tower.levels.at(static_cast<std::size_t>(index));
    const int n = f.n();
    const double eps = params.epsilon;

    RegularityCertificate cert{eps,
                               n,
                               index,
                               level.freqs,
                               level.cert_radius,
                               0.0,
                               decompose(f, tower, index),
                               level.cert_weight,
                               0.0,
                               0.0,
                               0.0,
                               0.0,
                               {},
                               {},
                               {},
                               {},
                               false,
                               false};
    cert.realized_r = std::max(static_cast<double>(level.freqs.size()), 1.0 / cert.rho);

    const GroupFunction1D& chi = level.cert_weight.chi;
    cert.lambda_value = lambda_fourier_weighted(f, f, f, chi);
    cert.lambda_direct_check = lambda_direct(f, f, f, chi);
    cert.mean_value = f.mean();
    cert.mean_cubed = cert.mean_value * cert.mean_value * cert.mean_value;

    auto record = [](std::string name, double lhs, double rhs) {
        BoundCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.slack = rhs - lhs;
        c.pass = lhs <= rhs;
        return c;
    };

    cert.shell_energy = record("pigeonhole_shell_energy", shell_energy(tower, index),
                               eps * eps * kEnergyBudgetFactor);
    cert.rough_sup =
        record("rough_spectrum_sup", spectral_sup(dft2(cert.parts.rough)), 2.0 * level.coeff_threshold);
    cert.mid_l2 = record("mid_l2", l2_norm(cert.parts.mid), eps / 27.0);

    // Shift modulus of the smooth part over the doubled certificate Bohr set.
    const std::vector<int> shifts =
        bohr_set(level.freqs, std::min(2.0 * level.cert_radius, 1.0));
    double shift_sup = 0.0;
    for (int s : shifts) {
        for (int t : shifts) {
            if (s == 0 && t == 0) continue;
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    const double moved =
                        cert.parts.smooth.at((x + s) % n, (y + t) % n);
                    shift_sup = std::max(shift_sup,
                                         std::abs(moved - cert.parts.smooth.at(x, y)));
                }
            }
        }
    }
    cert.smooth_shift_sup = record("smooth_shift_sup", shift_sup, eps / 54.0);

    cert.bounds_pass = cert.shell_energy.pass && cert.rough_sup.pass && cert.mid_l2.pass &&
                       cert.smooth_shift_sup.pass;
    cert.pass = cert.lambda_value >= cert.mean_cubed - eps;
    return cert;
}

} // namespace isotri
