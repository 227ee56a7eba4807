#include "doctest.h"
#include "support.hpp"

using namespace odc;
using namespace odc::testing;

namespace {

// Quotient oracle: S_n(h)/h and S_k(h)/h from the definition at sample points.
// Every other k0 is offset by 1/7, which keeps Gamma arguments off the poles.
void check_quotients_numerically(const ProperTerm& h, int points, unsigned seed) {
    const RatFuncNK sn = sigma_n(h), sk = sigma_k(h);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(2, 30);
    int checked = 0;
    for (int attempt = 0; attempt < 40 * points && checked < points; ++attempt) {
        const Rat n0(dist(rng));
        const Rat k0 = Rat(dist(rng) - 3) + (attempt % 2 ? make_rat(1, 7) : Rat(0));
        const auto qn = term_ratio(h, n0, k0, 1, 0), qk = term_ratio(h, n0, k0, 0, 1);
        const auto en = eval_ratfunc(sn, n0, k0), ek = eval_ratfunc(sk, n0, k0);
        if (!qn || !qk || !en || !ek) continue;
        REQUIRE(*qn == *en);
        REQUIRE(*qk == *ek);
        ++checked;
    }
    REQUIRE(checked == points);
}

} // namespace

TEST_SUITE("hyperterm") {

TEST_CASE("family classification from position and sign") {
    CHECK(make_gamma(true, 2, 3, 0).family == Family::A);
    CHECK(make_gamma(true, 2, -3, 0).family == Family::B);
    CHECK(make_gamma(false, 1, 1, 0).family == Family::U);
    CHECK(make_gamma(false, 2, -1, 0).family == Family::V);
    CHECK(make_gamma(true, 1, 0, 0).family == Family::A);
    CHECK(make_gamma(false, 1, 0, 0).family == Family::U);
    CHECK(make_gamma(true, 2, -3, 0).ck == 3);
    CHECK(make_gamma(false, 2, -1, 5).argument() == lin(2, -1, 5));
}

TEST_CASE("shift quotient examples") {
    const PolyNK n = PolyNK::n(), k = PolyNK::k();
    ProperTerm g;
    g.factors = {make_gamma(true, 2, -1, 1)};
    CHECK(sigma_n(g) == RatFuncNK(lin(2, -1, 1) * lin(2, -1, 2)));
    CHECK(sigma_k(g) == RatFuncNK(PolyNK(1), lin(2, -1, 0)));

    ProperTerm p;
    p.p = n * k + 1;
    CHECK(sigma_n(p) == RatFuncNK(shift(p.p, 1, 0), p.p));
    CHECK(sigma_k(pow2k()) == RatFuncNK(2));

    const ProperTerm h = example1();
    CHECK(sigma_n(h) == RatFuncNK(shift(h.p, 1, 0) * rising_factorial(lin(2, 3, 0), 2),
                                  h.p * rising_factorial(lin(2, -1, 0), 2)));
    CHECK(sigma_k(h) == RatFuncNK(shift(h.p, 0, 1) * rising_factorial(lin(2, 3, 0), 3) * lin(2, -1, -1), h.p));
}

TEST_CASE("structural parameters of the worked examples") {
    const StructuralParams s1 = structural_params(example1());
    CHECK(s1.delta == 2);
    CHECK(s1.theta == 2);
    CHECK(s1.lambda == 2);
    CHECK(s1.mu == 0);
    CHECK(s1.nu == 4);
    const StructuralParams s2 = structural_params(example2());
    CHECK(s2 == StructuralParams{0, 3, 3, 0, 3});
    ProperTerm p;
    p.p = PolyNK::n().pow(3) + PolyNK::k();
    CHECK(structural_params(p) == StructuralParams{3, 0, 0, 0, 0});
}

TEST_CASE("splittability detection") {
    ProperTerm q;
    q.factors = {make_gamma(true, 1, 1, 2), make_gamma(false, 1, 1, 0)};
    CHECK(detect_splittable(q));
    CHECK_FALSE(detect_splittable(pow2k()));
    CHECK_FALSE(detect_splittable(example1()));
    CHECK_FALSE(detect_splittable(example2()));
    ProperTerm half;
    half.factors = {make_gamma(true, 1, 1, 0), make_gamma(false, 1, 1, make_rat(1, 2))};
    CHECK_FALSE(detect_splittable(half));
    ProperTerm rational;
    rational.p = PolyNK::k();
    CHECK(detect_splittable(rational));
}

TEST_CASE("validation rejects degenerate terms") {
    ProperTerm h;
    h.p = PolyNK();
    CHECK_THROWS_AS(h.validate(), PreconditionError);
    h = ProperTerm{};
    h.x = 0;
    CHECK_THROWS_AS(h.validate(), PreconditionError);
    h = ProperTerm{};
    GammaArg g;
    g.cn = -1;
    h.factors = {g};
    CHECK_THROWS_AS(h.validate(), PreconditionError);
}

TEST_CASE("shift quotients commute (randomized)") {
    std::mt19937 rng(21);
    for (int c = 0; c < 120; ++c) {
        const ProperTerm h = random_term(rng, 2, 2);
        const RatFuncNK sn = sigma_n(h), sk = sigma_k(h);
        REQUIRE(shift(sn, 0, 1) * sk == shift(sk, 1, 0) * sn);
    }
}

TEST_CASE("parameter relations hold (randomized)") {
    std::mt19937 rng(22);
    for (int c = 0; c < 300; ++c) {
        const ProperTerm h = random_term(rng, 3, 3);
        const StructuralParams sp = structural_params(h);
        REQUIRE(sp.lambda + sp.mu >= 0);
        REQUIRE(sp.theta == sp.lambda + std::max(sp.mu, 0));
        REQUIRE(sp.theta >= sp.abs_mu());
        REQUIRE(sp.nu >= 0);
        REQUIRE(sp.delta == h.p.degree().value_or(0));
    }
}

TEST_CASE("shift quotients match the definition at sample points") {
    check_quotients_numerically(example1(), 20, 1);
    check_quotients_numerically(example2(), 20, 2);
    std::mt19937 rng(23);
    for (int c = 0; c < 40; ++c) check_quotients_numerically(random_term(rng, 2, 2), 5, 100 + c);
}

} // TEST_SUITE
