#include <doctest.h>

#include <algorithm>
#include <vector>

#include "isotri/errors.hpp"
#include "isotri/finite_field.hpp"
#include "support.hpp"

using namespace isotri;
using testutil::Rng;

namespace {

using Point = FFConfigSet::Point;

Point make_point(std::initializer_list<int> digits) {
    Point p;
    for (int d : digits) p.push_back(static_cast<std::uint8_t>(d));
    return p;
}

/// Quadruple-loop oracle straight from the definition: enumerate all
/// (a, b, m, n) in (F_q^n)^4 with (m,n) != (0,0), build the three points,
/// require them pairwise distinct and all in A.
bool has_strict_configuration_brute(const FFConfigSet& a) {
    const FiniteField f(a.q());
    const int n = a.n();
    std::int64_t space = 1;
    for (int i = 0; i < n; ++i) space *= a.q();

    auto decode = [&](std::int64_t code) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(code % a.q());
            code /= a.q();
        }
        return v;
    };

    for (std::int64_t ac = 0; ac < space; ++ac)
        for (std::int64_t bc = 0; bc < space; ++bc)
            for (std::int64_t mc = 0; mc < space; ++mc)
                for (std::int64_t nc = 0; nc < space; ++nc) {
                    if (mc == 0 && nc == 0) continue;
                    const auto av = decode(ac), bv = decode(bc), mv = decode(mc), nv = decode(nc);
                    Point p1(static_cast<std::size_t>(2 * n)), p2 = p1, p3 = p1;
                    for (int i = 0; i < n; ++i) {
                        const std::size_t ui = static_cast<std::size_t>(i);
                        const std::size_t vi = static_cast<std::size_t>(n + i);
                        p1[ui] = static_cast<std::uint8_t>(av[ui]);
                        p1[vi] = static_cast<std::uint8_t>(bv[ui]);
                        p2[ui] = static_cast<std::uint8_t>(f.add(av[ui], mv[ui]));
                        p2[vi] = static_cast<std::uint8_t>(f.add(bv[ui], nv[ui]));
                        p3[ui] = static_cast<std::uint8_t>(f.sub(av[ui], nv[ui]));
                        p3[vi] = static_cast<std::uint8_t>(f.add(bv[ui], mv[ui]));
                    }
                    if (p1 == p2 || p1 == p3 || p2 == p3) continue;
                    if (a.contains(p1) && a.contains(p2) && a.contains(p3)) return true;
                }
    return false;
}

FFConfigSet random_points_set(int q, int n, int count, Rng& rng) {
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) {
        Point p(static_cast<std::size_t>(2 * n));
        for (auto& d : p) d = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(q)));
        pts.push_back(std::move(p));
    }
    return FFConfigSet(q, n, std::move(pts));
}

/// Greedy configuration-free set: insert random points, drop any insertion
/// that creates a configuration in the requested mode.
FFConfigSet greedy_free_set(int q, int n, int target, Rng& rng, ConfigurationMode mode) {
    std::vector<Point> accepted;
    for (int attempts = 0; attempts < 40 * target; ++attempts) {
        if (static_cast<int>(accepted.size()) >= target) break;
        Point p(static_cast<std::size_t>(2 * n));
        for (auto& d : p) d = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(q)));
        auto candidate = accepted;
        candidate.push_back(p);
        FFConfigSet trial(q, n, candidate);
        if (trial.size() == accepted.size()) continue; // duplicate
        if (!has_configuration(trial, mode)) accepted = std::move(candidate);
    }
    return FFConfigSet(q, n, accepted);
}

} // namespace

TEST_SUITE("finite-field") {

TEST_CASE("field axioms, exhaustively for every supported order") {
    for (int q : FiniteField::supported_orders()) {
        const FiniteField f(q);
        CHECK(f.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1); // multiplicative group order
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // char * 1 = 0.
        int acc = 0;
        for (int i = 0; i < f.characteristic(); ++i) acc = f.add(acc, 1);
        CHECK(acc == 0);
    }
    CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
}

TEST_CASE("configuration search examples") {
    SUBCASE("single point") {
        const FFConfigSet a(3, 1, {make_point({0, 0})});
        CHECK(find_configurations(a, ConfigurationMode::kStrict).empty());
        CHECK(find_configurations(a, ConfigurationMode::kNotAllEqual).empty());
    }
    SUBCASE("hand-built triple over F_3") {
        const FFConfigSet a(3, 1,
                            {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})});
        const auto strict = find_configurations(a, ConfigurationMode::kStrict);
        REQUIRE(!strict.empty());
        // Apex (0,0) with m=(1), n=(0) reaches (1,0) and (0,1).
        bool found = false;
        for (const auto& t : strict) {
            if (a.point(t.first) == make_point({0, 0}) &&
                a.point(t.second) == make_point({1, 0}) &&
                a.point(t.third) == make_point({0, 1}))
                found = true;
        }
        CHECK(found);
    }
    SUBCASE("two points over odd characteristic never form a triple") {
        Rng rng(17);
        for (int q : {3, 5, 7, 9}) {
            for (int trial = 0; trial < 20; ++trial) {
                const auto a = random_points_set(q, 2, 2, rng);
                CHECK(find_configurations(a, ConfigurationMode::kStrict).empty());
            }
        }
    }
    SUBCASE("characteristic 2 collapses two corners") {
        // p2 = p3 when m = n != 0: a degenerate triple that the strict mode
        // must ignore and the not-all-equal mode must keep.
        const FFConfigSet a(2, 1, {make_point({0, 0}), make_point({1, 1})});
        CHECK(find_configurations(a, ConfigurationMode::kStrict).empty());
        CHECK(!find_configurations(a, ConfigurationMode::kNotAllEqual).empty());
    }
}

TEST_CASE("strict search agrees with the quadruple-loop oracle") {
    Rng rng(4096);
    const std::pair<int, int> shapes[] = {{2, 2}, {2, 4}, {3, 1}, {3, 3}, {5, 2}, {7, 1}, {9, 1}};
    for (const auto& [q, n] : shapes) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = random_points_set(q, n, 2 + static_cast<int>(rng.below(6)), rng);
            CHECK(has_configuration(a, ConfigurationMode::kStrict) ==
                  has_strict_configuration_brute(a));
        }
    }
}

TEST_CASE("counting identity") {
    SUBCASE("single point") {
        const FFConfigSet a(3, 1, {make_point({1, 2})});
        CHECK(verify_identity(a));
    }
    SUBCASE("two generic points over F_3") {
        const FFConfigSet a(3, 1, {make_point({0, 0}), make_point({1, 2})});
        REQUIRE(!has_configuration(a, ConfigurationMode::kNotAllEqual));
        CHECK(verify_identity(a));
    }
    SUBCASE("greedy configuration-free sets") {
        Rng rng(31);
        for (int q : {2, 3, 5}) {
            const auto a = greedy_free_set(q, 2, 12, rng, ConfigurationMode::kNotAllEqual);
            CHECK(verify_identity(a));
        }
    }
    SUBCASE("fails at a planted configuration") {
        const FFConfigSet a(3, 1,
                            {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})});
        const auto triples = find_configurations(a, ConfigurationMode::kStrict);
        REQUIRE(!triples.empty());
        const auto& t = triples.front();
        const IdentitySides s = identity_sides_at(a, t.first, t.second, t.third);
        CHECK(s.lhs != s.rhs);
        CHECK(s.lhs == 1); // constraints hold at the triple
        CHECK(s.rhs == 0); // but the points are not all equal
        CHECK_THROWS_AS(verify_identity(a), std::invalid_argument);
    }
}

TEST_CASE("cardinality bound") {
    SUBCASE("empty set") {
        const FFConfigSet a(3, 1, {});
        const auto r = check_cardinality_bound(a);
        CHECK(r.pass);
        CHECK(r.size == 0);
    }
    SUBCASE("greedy sets stay under the bound") {
        Rng rng(47);
        const auto a = greedy_free_set(3, 1, 30, rng, ConfigurationMode::kStrict);
        const auto r = check_cardinality_bound(a);
        CHECK(r.pass);
        CHECK(r.bound == doctest::Approx(3.0 * r.c_q * r.c_q).epsilon(1e-12));

        const auto b = greedy_free_set(2, 3, 25, rng, ConfigurationMode::kStrict);
        CHECK(check_cardinality_bound(b).pass);
    }
    SUBCASE("rejects sets with configurations") {
        const FFConfigSet a(3, 1,
                            {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})});
        CHECK_THROWS_AS(check_cardinality_bound(a), std::invalid_argument);
    }
}

TEST_CASE("text format") {
    SUBCASE("round trip") {
        Rng rng(88);
        for (int trial = 0; trial < 20; ++trial) {
            const int q = FiniteField::supported_orders()[rng.below(7)];
            const int n = 1 + static_cast<int>(rng.below(3));
            const auto a = random_points_set(q, n, 1 + static_cast<int>(rng.below(10)), rng);
            const auto back = FFConfigSet::parse(a.serialize());
            CHECK(back.q() == a.q());
            CHECK(back.n() == a.n());
            CHECK(back.points() == a.points());
        }
    }
    SUBCASE("contiguous digit rows") {
        const auto a = FFConfigSet::parse("3 2\n0121\n2200\n");
        CHECK(a.size() == 2);
        CHECK(a.contains(make_point({0, 1, 2, 1})));
        CHECK(a.contains(make_point({2, 2, 0, 0})));
    }
    SUBCASE("diagnostics") {
        CHECK_THROWS_AS(FFConfigSet::parse(""), ParseError);
        CHECK_THROWS_AS(FFConfigSet::parse("6 1\n0 0\n"), ParseError); // bad order
        CHECK_THROWS_AS(FFConfigSet::parse("3 1\n0 3\n"), ParseError); // digit >= q
        CHECK_THROWS_AS(FFConfigSet::parse("3 2\n0 1\n"), ParseError); // wrong arity
    }
}

TEST_CASE("set construction validates and dedupes") {
    const FFConfigSet a(3, 1, {make_point({1, 2}), make_point({1, 2}), make_point({0, 0})});
    CHECK(a.size() == 2);
    CHECK_THROWS_AS(FFConfigSet(3, 1, {make_point({3, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(FFConfigSet(6, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(FFConfigSet(3, 0, {}), std::invalid_argument);
}

TEST_CASE("configuration search cap") {
    std::vector<Point> many;
    for (int a = 0; a < 9 && many.size() <= 2000; ++a)
        for (int b = 0; b < 9 && many.size() <= 2000; ++b)
            for (int c = 0; c < 9 && many.size() <= 2000; ++c)
                for (int d = 0; d < 9 && many.size() <= 2000; ++d)
                    many.push_back(make_point({a, b, c, d}));
    const FFConfigSet big(9, 2, std::vector<Point>(many.begin(), many.begin() + 2001));
    CHECK_THROWS_AS(has_configuration(big, ConfigurationMode::kStrict), ResourceCapError);
}

} // TEST_SUITE
