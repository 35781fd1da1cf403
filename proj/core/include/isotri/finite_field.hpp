#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace isotri {

/// Arithmetic in GF(q) for q in {2,3,4,5,7,8,9}. Elements are 0..q-1;
/// prime-power fields encode polynomials over F_p in base-p digits and
/// multiply through generator log/antilog tables, prime fields reduce mod q
/// directly.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return deg_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int pow(int a, std::int64_t e) const;
    int inv(int a) const;

    static bool supported(int q);
    static const std::vector<int>& supported_orders();

private:
    int q_, p_, deg_;
    bool prime_;
    std::vector<int> exp_table_; // g^i for i in [0, 2(q-1))
    std::vector<int> log_table_; // log_g of nonzero elements

    int poly_add(int a, int b) const;
    int poly_mul_mod(int a, int b, int modulus_poly) const;
};

/// A set of points of (F_q^n)^2; each point is 2n digits, the n coordinates
/// of the first component followed by the n coordinates of the second.
/// Points are kept sorted and duplicate-free.
class FFConfigSet {
public:
    using Point = std::vector<std::uint8_t>;

    FFConfigSet(int q, int n, std::vector<Point> points);

    int q() const { return q_; }
    int n() const { return n_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const;
    /// Index of p, or npos.
    std::size_t find(const Point& p) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Text format: header line "q n", then one line per point listing its
    /// 2n digits separated by spaces (a contiguous digit string is also
    /// accepted). Throws ParseError with line diagnostics.
    static FFConfigSet parse(const std::string& text);
    std::string serialize() const;

private:
    int q_, n_;
    std::vector<Point> points_;
};

enum class ConfigurationMode {
    kStrict,      // three pairwise distinct points
    kNotAllEqual, // not all three coincide (meaningful in characteristic 2)
};

struct ConfigurationTriple {
    std::size_t first, second, third; // indices into the set
};

/// All triples (p1,p2,p3) in A^3 with p1-coordinates (x,y), (x',y'),
/// (x'',y'') satisfying x-y-x'+y'' = 0 and x+y-y'-x'' = 0 componentwise,
/// filtered by the distinctness mode. Caps |A| at 2000 (ResourceCapError).
std::vector<ConfigurationTriple> find_configurations(const FFConfigSet& a,
                                                     ConfigurationMode mode);

/// Early-exit variant of the above.
bool has_configuration(const FFConfigSet& a, ConfigurationMode mode);

/// Both sides of the counting identity at one triple of set points, as
/// field elements: the left side is the product of coordinate tests
/// delta_0(v) = prod_i (1 - v_i^(q-1)), the right side the diagonal sum
/// over the set.
struct IdentitySides {
    int lhs;
    int rhs;
};
IdentitySides identity_sides_at(const FFConfigSet& a, std::size_t i, std::size_t j,
                                std::size_t k);

/// True iff the identity holds at every triple of A^3. Requires A free of
/// not-all-equal configurations (throws std::invalid_argument naming a
/// violating triple) and |A| <= 200 (ResourceCapError).
bool verify_identity(const FFConfigSet& a);

/// |A| <= 3 c_q^(2n) for a strictly configuration-free A; throws
/// std::invalid_argument when a configuration is present.
struct CardinalityReport {
    std::int64_t size = 0;
    double c_q = 0.0;
    double bound = 0.0;
    bool pass = false;
    double slack = 0.0;
};
CardinalityReport check_cardinality_bound(const FFConfigSet& a);

} // namespace isotri
