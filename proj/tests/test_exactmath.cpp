#include "doctest.h"
#include "support.hpp"

#include "odc/linalg.hpp"
#include "odc/matrix.hpp"

#include <algorithm>

using namespace odc;
using namespace odc::testing;

TEST_SUITE("exactmath") {

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(3, -6).get_den() == 2);
    CHECK(make_rat(3, -6).get_num() == -1);
    CHECK(make_rat(0, -5).get_den() == 1);
    CHECK(to_string(make_rat(-4, 6)) == "-2/3");
    CHECK(to_string(Rat(7)) == "7");
    CHECK(parse_rat("-10/4") == make_rat(-5, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK(floor_rat(make_rat(-7, 2)) == -4);
    CHECK(ceil_rat(make_rat(-7, 2)) == -3);
}

TEST_CASE("zero polynomial has no degree") {
    CHECK_FALSE(PolyNK().degree().has_value());
    CHECK_FALSE(PolyN().degree().has_value());
    CHECK(PolyNK(5).degree() == 0);
    const PolyNK p = PolyNK::n() * PolyNK::k().pow(3) + PolyNK::n().pow(2);
    CHECK(p.degree() == 4);
    CHECK(p.degree_n() == 2);
    CHECK(p.degree_k() == 3);
    CHECK((p - p).is_zero());
    CHECK((p - p).terms().empty());
}

TEST_CASE("rising factorial examples") {
    const PolyNK n = PolyNK::n(), k = PolyNK::k();
    CHECK(rising_factorial(n * k + 3, 0) == PolyNK(1));
    CHECK(rising_factorial(n, 1) == n);
    CHECK(rising_factorial(n, 2) == n * n + n);
    const PolyNK a = 2 * n - k;
    CHECK(rising_factorial(a, 2) == a * (a + 1));
    CHECK(rising_factorial(a, 3).degree() == 3);
    CHECK(rising_factorial(PolyN::n(), 3) == PolyN({0, 2, 3, 1}));
}

TEST_CASE("shift examples") {
    const PolyNK n = PolyNK::n(), k = PolyNK::k();
    CHECK(shift(n + k, 1, 0) == n + k + 1);
    CHECK(shift(n * k, 0, 1) == n * k + n);
    CHECK(shift(n * n, -1, 0) == n * n - 2 * n + 1);
    CHECK(PolyN::n().shift(2) == PolyN({2, 1}));
}

TEST_CASE("rising factorial splits at any point (randomized)") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> md(0, 4);
    for (int c = 0; c < 400; ++c) {
        const PolyNK p = random_poly_nk(rng, 2, 3, 4);
        const int m1 = md(rng), m2 = md(rng);
        const PolyNK lhs = rising_factorial(p, m1 + m2);
        const PolyNK rhs = rising_factorial(p, m1) * rising_factorial(p + Rat(m1), m2);
        REQUIRE(lhs == rhs);
        if (!p.is_constant()) REQUIRE(lhs.degree() == (m1 + m2) * *p.degree());
    }
}

TEST_CASE("shifts compose additively (randomized)") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> sd(-3, 3);
    for (int c = 0; c < 400; ++c) {
        const PolyNK p = random_poly_nk(rng, 3, 4, 5);
        const long a = sd(rng), b = sd(rng), cc = sd(rng), d = sd(rng);
        REQUIRE(shift(shift(p, a, b), cc, d) == shift(p, a + cc, b + d));
        const Rat n0 = random_rat(rng, 9, 2), k0 = random_rat(rng, 9, 2);
        REQUIRE(shift(p, a, b).eval(n0, k0) == p.eval(n0 + a, k0 + b));
    }
}

TEST_CASE("polynomial division and gcd (randomized)") {
    std::mt19937 rng(13);
    for (int c = 0; c < 200; ++c) {
        const PolyN a = random_poly_n(rng, 4, 6), b = random_poly_n(rng, 3, 6), g = random_poly_n(rng, 2, 4);
        if (b.is_zero() || g.is_zero()) continue;
        const auto [q, r] = a.divmod(b);
        REQUIRE(q * b + r == a);
        REQUIRE((r.is_zero() || *r.degree() < *b.degree()));
        const PolyN ag = a * g, bg = b * g;
        const PolyN h = gcd(ag, bg);
        if (ag.is_zero()) continue;
        REQUIRE(ag.divmod(h).second.is_zero());
        REQUIRE(bg.divmod(h).second.is_zero());
        REQUIRE(h.divmod(g.monic()).second.is_zero());
    }
}

TEST_CASE("bivariate gcd and exact division") {
    const PolyNK n = PolyNK::n(), k = PolyNK::k();
    const PolyNK f = (n + k + 1) * (2 * n - k), g = (n + k + 1) * (n * k + 3);
    const PolyNK h = gcd(f, g);
    CHECK(f.try_div(h).has_value());
    CHECK(g.try_div(h).has_value());
    CHECK(h.degree() == 1);
    CHECK(f.exact_div(n + k + 1) == 2 * n - k);
    CHECK_FALSE(f.try_div(n + 2).has_value());
}

TEST_CASE("rational roots of products of linear factors") {
    const PolyN f = PolyN({-1, 2}) * PolyN({3, 1}) * PolyN({3, 1}) * PolyN({1, 5});
    const auto roots = split_rational_roots(f);
    REQUIRE(roots.has_value());
    std::vector<Rat> got = *roots;
    std::sort(got.begin(), got.end());
    const std::vector<Rat> want{Rat(-3), Rat(-3), make_rat(-1, 5), make_rat(1, 2)};
    CHECK(got == want);
    CHECK_FALSE(split_rational_roots(PolyN({1, 0, 1})).has_value());
}

TEST_CASE("rational function normalization") {
    const PolyNK n = PolyNK::n(), k = PolyNK::k();
    const RatFuncNK f((n + k) * (n - 1) * 4, (n + k) * (2 * n + 6));
    CHECK(f.num() == 2 * (n - 1));
    CHECK(f.den() == n + 3);
    CHECK(RatFuncNK(f.num(), f.den()) == f);
    CHECK(RatFuncNK(PolyNK(), n).den() == PolyNK(1));
    CHECK_THROWS(RatFuncNK(n, PolyNK()));
}

TEST_CASE("normalization is idempotent and equality is cross-multiplication (randomized)") {
    std::mt19937 rng(14);
    for (int c = 0; c < 150; ++c) {
        const PolyNK a = random_poly_nk(rng, 2, 3, 4), b = random_poly_nk(rng, 2, 3, 4);
        const PolyNK g = random_poly_nk(rng, 1, 2, 3);
        if (b.is_zero() || g.is_zero()) continue;
        const RatFuncNK f(a * g, b * g);
        REQUIRE(RatFuncNK(f.num(), f.den()) == f);
        REQUIRE(cross_equal(f.num(), f.den(), a, b));
        REQUIRE(f == RatFuncNK(a, b));
        if (!f.den().is_zero()) REQUIRE(f.den().lc() == 1);
    }
}

TEST_CASE("nullspace examples") {
    const auto v = nullspace_vector(MatrixQ{{1, 1}});
    REQUIRE(v.has_value());
    CHECK((*v)[0] == -(*v)[1]);
    CHECK((*v)[0] != 0);
    CHECK_FALSE(nullspace_vector(MatrixQ{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).has_value());

    const auto basis = nullspace_over_ratfunc({{PolyN::n(), PolyN::n()}});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == -basis[0][1]);
    CHECK(basis[0][0].is_constant());
    CHECK(nullspace_over_ratfunc({{PolyN::n(), PolyN(1)}, {PolyN(1), PolyN::n()}}).empty());
}

TEST_CASE("kernel vectors satisfy Mv = 0 (randomized)") {
    std::mt19937 rng(15);
    std::uniform_int_distribution<int> sz(1, 6), ent(-4, 4);
    int found = 0;
    for (int c = 0; c < 200; ++c) {
        const int rows = sz(rng), cols = sz(rng), rank_cap = sz(rng);
        // product of rows x rank_cap and rank_cap x cols has rank <= rank_cap
        MatrixQ a(static_cast<std::size_t>(rows), static_cast<std::size_t>(rank_cap));
        MatrixQ b(static_cast<std::size_t>(rank_cap), static_cast<std::size_t>(cols));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = make_rat(ent(rng), 1 + (ent(rng) + 4) % 3);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = Rat(ent(rng));
        MatrixQ m(a.rows(), b.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (std::size_t t = 0; t < a.cols(); ++t) m(i, j) += a(i, t) * b(t, j);
        const auto ech = IntegerEchelon::from_rational(m);
        const auto v = nullspace_vector(m);
        REQUIRE(v.has_value() == (ech.rank() < m.cols()));
        if (!v) continue;
        ++found;
        std::vector<Rat> vr(v->begin(), v->end());
        for (const Rat& x : m * vr) REQUIRE(x == 0);
        Integer g = 0;
        for (const auto& x : *v) g = gcd(g, x);
        REQUIRE(abs(g) == 1);
    }
    CHECK(found > 50);
}

TEST_CASE("ratfunc kernel vectors annihilate the rows (randomized)") {
    std::mt19937 rng(16);
    std::uniform_int_distribution<int> sz(1, 4);
    for (int c = 0; c < 60; ++c) {
        const int rows = sz(rng), cols = sz(rng) + 1;
        std::vector<std::vector<PolyN>> m(static_cast<std::size_t>(rows));
        for (auto& row : m)
            for (int j = 0; j < cols; ++j) row.push_back(random_poly_n(rng, 2, 3));
        const auto basis = nullspace_over_ratfunc(m);
        for (const auto& v : basis) {
            bool nonzero = false;
            for (const auto& x : v) nonzero = nonzero || !x.is_zero();
            REQUIRE(nonzero);
            for (const auto& row : m) {
                PolyN acc;
                for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
                REQUIRE(acc.is_zero());
            }
        }
        REQUIRE(basis.size() >= static_cast<std::size_t>(std::max(0, cols - rows)));
    }
}

} // TEST_SUITE
