#include "isotri/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "isotri/errors.hpp"
#include "isotri/slice_rank.hpp"

namespace isotri {

namespace {

struct FieldSpec {
    int q, p, deg;
    int modulus_poly; // base-p digit encoding, 0 for prime fields
};

// Irreducible moduli: x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+1 over F_3.
constexpr std::array<FieldSpec, 7> kFields{{{2, 2, 1, 0},
                                            {3, 3, 1, 0},
                                            {4, 2, 2, 0b111},
                                            {5, 5, 1, 0},
                                            {7, 7, 1, 0},
                                            {8, 2, 3, 0b1011},
                                            {9, 3, 2, 1 * 9 + 0 * 3 + 1}}};

const FieldSpec& spec_for(int q) {
    for (const auto& s : kFields)
        if (s.q == q) return s;
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                " (supported: 2,3,4,5,7,8,9)");
}

} // namespace

bool FiniteField::supported(int q) {
    for (const auto& s : kFields)
        if (s.q == q) return true;
    return false;
}

const std::vector<int>& FiniteField::supported_orders() {
    static const std::vector<int> orders{2, 3, 4, 5, 7, 8, 9};
    return orders;
}

int FiniteField::poly_add(int a, int b) const {
    int out = 0, mult = 1;
    while (a > 0 || b > 0) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

int FiniteField::poly_mul_mod(int a, int b, int modulus_poly) const {
    // Digit convolution over F_p, then reduction by the monic modulus.
    std::array<int, 8> prod{};
    std::array<int, 4> da{}, db{};
    for (int i = 0; i < deg_; ++i, a /= p_) da[static_cast<std::size_t>(i)] = a % p_;
    for (int i = 0; i < deg_; ++i, b /= p_) db[static_cast<std::size_t>(i)] = b % p_;
    for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;

    std::array<int, 4> mdig{};
    for (int i = 0, mp = modulus_poly; i <= deg_; ++i, mp /= p_) mdig[static_cast<std::size_t>(i)] = mp % p_;
    for (int d = 2 * deg_ - 2; d >= deg_; --d) {
        const int c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        // x^deg = -(lower part of modulus); modulus is monic.
        for (int i = 0; i < deg_; ++i) {
            const int sub_term = (c * mdig[static_cast<std::size_t>(i)]) % p_;
            auto& slot = prod[static_cast<std::size_t>(d - deg_ + i)];
            slot = ((slot - sub_term) % p_ + p_) % p_;
        }
    }
    int out = 0, mult = 1;
    for (int i = 0; i < deg_; ++i, mult *= p_) out += prod[static_cast<std::size_t>(i)] * mult;
    return out;
}

FiniteField::FiniteField(int q) {
    const FieldSpec& s = spec_for(q);
    q_ = s.q;
    p_ = s.p;
    deg_ = s.deg;
    prime_ = s.deg == 1;
    if (prime_) return;

    // Generator search for the multiplicative group of a prime-power field.
    for (int g = 2; g < q_; ++g) {
        std::vector<int> exps;
        exps.reserve(static_cast<std::size_t>(q_ - 1));
        int v = 1;
        bool primitive = true;
        for (int i = 0; i < q_ - 1; ++i) {
            exps.push_back(v);
            v = poly_mul_mod(v, g, s.modulus_poly);
            if (v == 1 && i + 1 < q_ - 1) {
                primitive = false;
                break;
            }
        }
        if (primitive && v == 1) {
            exp_table_.assign(2 * (q_ - 1), 0);
            log_table_.assign(static_cast<std::size_t>(q_), 0);
            for (int i = 0; i < q_ - 1; ++i) {
                exp_table_[static_cast<std::size_t>(i)] = exps[static_cast<std::size_t>(i)];
                exp_table_[static_cast<std::size_t>(i + q_ - 1)] = exps[static_cast<std::size_t>(i)];
                log_table_[static_cast<std::size_t>(exps[static_cast<std::size_t>(i)])] = i;
            }
            return;
        }
    }
    throw std::logic_error("no generator found for GF(" + std::to_string(q) + ")");
}

int FiniteField::add(int a, int b) const {
    if (prime_) return (a + b) % q_;
    return poly_add(a, b);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::neg(int a) const {
    if (prime_) return (q_ - a) % q_;
    // Negate each base-p digit.
    int out = 0, mult = 1, v = a;
    for (int i = 0; i < deg_; ++i, v /= p_, mult *= p_) out += ((p_ - v % p_) % p_) * mult;
    return out;
}

int FiniteField::mul(int a, int b) const {
    if (prime_) return (a * b) % q_;
    if (a == 0 || b == 0) return 0;
    return exp_table_[static_cast<std::size_t>(log_table_[static_cast<std::size_t>(a)] +
                                               log_table_[static_cast<std::size_t>(b)])];
}

int FiniteField::pow(int a, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("field pow wants a nonnegative exponent");
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!prime_)
        return exp_table_[static_cast<std::size_t>(
            (static_cast<std::int64_t>(log_table_[static_cast<std::size_t>(a)]) * e) % (q_ - 1))];
    int result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    if (prime_) return pow(a, q_ - 2);
    return exp_table_[static_cast<std::size_t>(q_ - 1 - log_table_[static_cast<std::size_t>(a)])];
}

FFConfigSet::FFConfigSet(int q, int n, std::vector<Point> points) : q_(q), n_(n) {
    spec_for(q); // validates the order
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    for (const Point& p : points) {
        if (p.size() != static_cast<std::size_t>(2 * n))
            throw std::invalid_argument("point must have 2n coordinates");
        for (std::uint8_t d : p)
            if (d >= q) throw std::invalid_argument("coordinate out of field range");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
}

bool FFConfigSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t FFConfigSet::find(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return npos;
    return static_cast<std::size_t>(it - points_.begin());
}

FFConfigSet FFConfigSet::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t i = line.find_first_not_of(" \t");
            if (i == std::string::npos || line[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("missing 'q n' header line", 1, 1);
    int q = 0, n = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> q >> n)) throw ParseError("header must be 'q n'", lineno, 1);
        std::string rest;
        if (hs >> rest) throw ParseError("trailing tokens after 'q n' header", lineno, 1);
    }
    if (!FiniteField::supported(q)) throw ParseError("unsupported field order " + std::to_string(q), lineno, 1);
    if (n < 1) throw ParseError("dimension must be >= 1", lineno, 1);

    std::vector<Point> points;
    while (next_content_line()) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        Point p;
        if (toks.size() == 1 && toks[0].size() == static_cast<std::size_t>(2 * n)) {
            for (char ch : toks[0]) {
                if (ch < '0' || ch > '9') throw ParseError("invalid digit", lineno, 1);
                p.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
        } else {
            for (const std::string& tok : toks) {
                int v;
                try {
                    v = std::stoi(tok);
                } catch (...) {
                    throw ParseError("invalid coordinate '" + tok + "'", lineno, 1);
                }
                if (v < 0) throw ParseError("negative coordinate", lineno, 1);
                p.push_back(static_cast<std::uint8_t>(v));
            }
        }
        if (p.size() != static_cast<std::size_t>(2 * n))
            throw ParseError("expected " + std::to_string(2 * n) + " coordinates, got " +
                                 std::to_string(p.size()),
                             lineno, 1);
        for (std::uint8_t d : p)
            if (d >= q) throw ParseError("coordinate " + std::to_string(d) + " out of field range", lineno, 1);
        points.push_back(std::move(p));
    }
    return FFConfigSet(q, n, std::move(points));
}

std::string FFConfigSet::serialize() const {
    std::ostringstream out;
    out << q_ << ' ' << n_ << '\n';
    for (const Point& p : points_) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << static_cast<int>(p[i]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

constexpr std::size_t kConfigSearchCap = 2000;
constexpr std::size_t kIdentityCap = 200;

/// Third point forced by the two constraints: x'' = x + y - y',
/// y'' = y + x' - x, componentwise.
FFConfigSet::Point derived_third(const FiniteField& f, int n, const FFConfigSet::Point& p1,
                                 const FFConfigSet::Point& p2) {
    FFConfigSet::Point out(static_cast<std::size_t>(2 * n));
    for (int c = 0; c < n; ++c) {
        const int x = p1[static_cast<std::size_t>(c)], y = p1[static_cast<std::size_t>(n + c)];
        const int xp = p2[static_cast<std::size_t>(c)], yp = p2[static_cast<std::size_t>(n + c)];
        out[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(f.sub(f.add(x, y), yp));
        out[static_cast<std::size_t>(n + c)] = static_cast<std::uint8_t>(f.add(f.sub(y, x), xp));
    }
    return out;
}

std::vector<ConfigurationTriple> find_configurations_impl(const FFConfigSet& a,
                                                          ConfigurationMode mode,
                                                          bool first_only) {
    if (a.size() > kConfigSearchCap)
        throw ResourceCapError("configuration search capped at 2000 points");
    const FiniteField field(a.q());
    const int n = a.n();
    std::vector<ConfigurationTriple> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue; // p1 = p2 forces the all-equal triple
            const auto third = derived_third(field, n, a.point(i), a.point(j));
            const std::size_t k = a.find(third);
            if (k == FFConfigSet::npos) continue;
            if (mode == ConfigurationMode::kStrict && (k == i || k == j)) continue;
            out.push_back({i, j, k});
            if (first_only) return out;
        }
    }
    return out;
}

} // namespace

std::vector<ConfigurationTriple> find_configurations(const FFConfigSet& a,
                                                     ConfigurationMode mode) {
    return find_configurations_impl(a, mode, false);
}

bool has_configuration(const FFConfigSet& a, ConfigurationMode mode) {
    return !find_configurations_impl(a, mode, true).empty();
}

IdentitySides identity_sides_at(const FFConfigSet& a, std::size_t i, std::size_t j,
                                std::size_t k) {
    const FiniteField f(a.q());
    const int n = a.n();
    const auto& p1 = a.point(i);
    const auto& p2 = a.point(j);
    const auto& p3 = a.point(k);

    // delta_0(v) = prod_c (1 - v_c^(q-1)).
    auto delta0_factor = [&](int v) { return f.sub(1, f.pow(v, f.q() - 1)); };

    int lhs = 1;
    for (int c = 0; c < n; ++c) {
        const int x = p1[static_cast<std::size_t>(c)], y = p1[static_cast<std::size_t>(n + c)];
        const int xp = p2[static_cast<std::size_t>(c)], yp = p2[static_cast<std::size_t>(n + c)];
        const int xpp = p3[static_cast<std::size_t>(c)], ypp = p3[static_cast<std::size_t>(n + c)];
        const int t1 = f.add(f.sub(f.sub(x, y), xp), ypp);
        const int t2 = f.sub(f.sub(f.add(x, y), yp), xpp);
        lhs = f.mul(lhs, f.mul(delta0_factor(t1), delta0_factor(t2)));
    }

    // Diagonal sum over the set; the point-mass factor vanishes unless the
    // argument matches, so only the s = i term can contribute.
    auto point_mass = [&](const FFConfigSet::Point& at, const FFConfigSet::Point& of) {
        int v = 1;
        for (std::size_t c = 0; c < at.size(); ++c)
            v = f.mul(v, delta0_factor(f.sub(at[c], of[c])));
        return v;
    };
    int rhs = 0;
    const auto& anchor = a.point(i);
    rhs = f.add(rhs, f.mul(point_mass(p1, anchor),
                           f.mul(point_mass(p2, anchor), point_mass(p3, anchor))));
    return {lhs, rhs};
}

bool verify_identity(const FFConfigSet& a) {
    if (a.size() > kIdentityCap)
        throw ResourceCapError("identity verification capped at 200 points");
    const auto bad = find_configurations_impl(a, ConfigurationMode::kNotAllEqual, true);
    if (!bad.empty()) {
        const auto& t = bad.front();
        throw std::invalid_argument(
            "set is not configuration-free: triple at indices (" + std::to_string(t.first) + ", " +
            std::to_string(t.second) + ", " + std::to_string(t.third) + ")");
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) {
                const IdentitySides s = identity_sides_at(a, i, j, k);
                if (s.lhs != s.rhs) return false;
            }
    return true;
}

CardinalityReport check_cardinality_bound(const FFConfigSet& a) {
    if (has_configuration(a, ConfigurationMode::kStrict))
        throw std::invalid_argument("cardinality bound applies to configuration-free sets only");
    const PhiMinimum m = minimize_phi(a.q());
    CardinalityReport r;
    r.size = static_cast<std::int64_t>(a.size());
    r.c_q = m.c_q;
    r.bound = 3.0 * std::pow(m.c_q, 2.0 * a.n());
    r.pass = static_cast<double>(r.size) <= r.bound;
    r.slack = r.bound - static_cast<double>(r.size);
    return r;
}

} // namespace isotri
