#include "doctest.h"
#include "support.hpp"

#include "odc/curves.hpp"
#include "odc/telescope.hpp"

#include <algorithm>

using namespace odc;
using namespace odc::testing;

namespace {

ProperTerm rising_term() {
    ProperTerm h;
    h.factors = {make_gamma(true, 1, 1, 0), make_gamma(false, 1, 0, 0), make_gamma(false, 0, 1, 1)};
    return h;
}

void check_region_closure(const Region& reg) {
    for (int r = 0; r <= reg.rmax; ++r)
        for (int d = 0; d <= reg.dmax; ++d) {
            if (!reg.marked(r, d)) continue;
            if (d < reg.dmax) REQUIRE(reg.marked(r, d + 1));
            if (r < reg.rmax) REQUIRE(reg.marked(r + 1, d));
        }
}

} // namespace

TEST_SUITE("telescope") {

TEST_CASE("Gosper triple of 2^k") {
    const GosperTriple g = gosper_triple(pow2k(), 1);
    REQUIRE(g.parts.size() == 2);
    CHECK(g.parts[0] == PolyNK(1));
    CHECK(g.parts[1] == PolyNK(1));
    CHECK(g.Q == PolyNK(2));
    CHECK(g.R == PolyNK(1));
}

TEST_CASE("Gosper triple of the first example") {
    const ProperTerm h = example1();
    const GosperTriple g0 = gosper_triple(h, 0);
    CHECK(g0.Q == rising_factorial(lin(2, 3, 0), 3) * lin(2, -1, -1));
    CHECK(g0.R == PolyNK(1));
    CHECK(g0.parts[0] == h.p);
    for (int r = 0; r <= 5; ++r) {
        const GosperTriple g = gosper_triple(h, r);
        REQUIRE(g.parts.size() == static_cast<std::size_t>(r + 1));
        for (const auto& p : g.parts) REQUIRE(p.degree_k().value_or(0) <= 2 + 2 * r);
        REQUIRE(g.Q.degree().value_or(0) <= 4);
        REQUIRE(g.R.degree().value_or(0) <= 4);
    }
}

TEST_CASE("Gosper triple degree bounds (randomized)") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> rd(0, 4);
    for (int c = 0; c < 60; ++c) {
        const ProperTerm h = random_term(rng, 2, 2);
        const StructuralParams sp = structural_params(h);
        const int r = std::max(sp.nu, rd(rng));
        const int d = sp.abs_mu() * sp.nu + rd(rng);
        const DegreePlan plan = degree_plan(sp, r, d);
        const GosperTriple g = gosper_triple(h, r);
        PolyNK P;
        int cap = 0;
        for (int i = 0; i <= r; ++i) {
            // a dense coefficient of exact degree d_i stands in for l_i
            const int di = plan.di[static_cast<std::size_t>(i)];
            if (di < 0) continue;
            PolyNK li;
            for (int j = 0; j <= di; ++j) li.add_term(Mono{j, 0}, Rat(j + 1 + i));
            P += li * g.parts[static_cast<std::size_t>(i)];
            cap = std::max(cap, di + i * sp.mu);
        }
        for (const auto& part : g.parts) REQUIRE(part.degree_k().value_or(0) <= sp.delta + sp.theta * r);
        if (!P.is_zero()) {
            REQUIRE(*P.degree() <= sp.delta + sp.lambda * r + cap);
            REQUIRE(*P.degree_k() <= sp.delta + sp.theta * r);
        }
        REQUIRE(g.Q.degree().value_or(0) <= sp.nu);
        REQUIRE(g.R.degree().value_or(0) <= sp.nu);
        REQUIRE(g.Q.degree_k().value_or(0) <= sp.nu);
        REQUIRE(g.R.degree_k().value_or(0) <= sp.nu);
    }
}

TEST_CASE("degree plan") {
    StructuralParams sp;
    sp.delta = 1;
    sp.theta = 2;
    sp.lambda = 2;
    sp.nu = 2;
    const DegreePlan flat = degree_plan(sp, 3, 7);
    CHECK(flat.di == std::vector<int>(4, 7));

    sp.mu = 1;
    sp.theta = 3;
    const DegreePlan p = degree_plan(sp, 5, 10);
    CHECK(p.di == std::vector<int>{10, 10, 10, 10, 9, 8});

    const StructuralParams s2 = structural_params(example2());
    const DegreePlan q = degree_plan(s2, 3, 24);
    CHECK(q.s1 == 6);
    CHECK(q.s2 == 30);

    CHECK_THROWS_AS(degree_plan(s2, 2, 24), PreconditionError);
    sp.mu = -2;
    CHECK_THROWS_AS(degree_plan(sp, 5, 3), PreconditionError);
    const DegreePlan neg = degree_plan(sp, 3, 10);
    CHECK(neg.di == std::vector<int>{6, 8, 10, 10});
}

TEST_CASE("uniform plan caps grow with order and degree") {
    std::mt19937 rng(32);
    for (int c = 0; c < 100; ++c) {
        const StructuralParams sp = structural_params(random_term(rng, 2, 1));
        for (int r = 0; r < 6; ++r)
            for (int d = 0; d < 6; ++d) {
                const DegreePlan a = uniform_plan(sp, r, d, 2);
                const DegreePlan b = uniform_plan(sp, r + 1, d, 2);
                const DegreePlan e = uniform_plan(sp, r, d + 1, 2);
                REQUIRE(b.s1 >= a.s1);
                REQUIRE(b.s2 >= a.s2);
                REQUIRE(e.s1 >= a.s1);
                REQUIRE(e.s2 >= a.s2);
                REQUIRE(a.di == std::vector<int>(static_cast<std::size_t>(r + 1), d));
            }
    }
}

TEST_CASE("system shapes") {
    const ProperTerm h2 = example2();
    const LinearSystem s = assemble_system(h2, degree_plan(structural_params(h2), 3, 24));
    CHECK(s.columns.size() == 296);
    CHECK(s.matrix.rows() <= 295);
    CHECK(s.ell_count == 100);

    const ProperTerm h1 = example1();
    const LinearSystem t = assemble_system(h1, degree_plan(structural_params(h1), 8, 13));
    CHECK(t.columns.size() == 441);
    CHECK(t.matrix.rows() <= 437);

    const LinearSystem u = assemble_system(pow2k(), degree_plan(structural_params(pow2k()), 0, 0));
    CHECK(u.columns.size() == 2);
    CHECK(u.matrix.rows() == 1);
    CHECK(u.columns[0] == ColumnLabel{ColumnLabel::Ell, 0, 0});
    CHECK(u.columns[1] == ColumnLabel{ColumnLabel::Y, 0, 0});
}

TEST_CASE("equation count stays under the support bound (randomized)") {
    std::mt19937 rng(33);
    std::uniform_int_distribution<int> rd(0, 3);
    for (int c = 0; c < 40; ++c) {
        const ProperTerm h = random_term(rng, 2, 2);
        const StructuralParams sp = structural_params(h);
        const int r = sp.nu + rd(rng);
        const int d = sp.abs_mu() * sp.nu + rd(rng);
        const LinearSystem s = assemble_system(h, degree_plan(sp, r, d));
        const long a = sp.delta + sp.theta * r + 1;
        const long b = sp.delta + 2L * d + sp.theta * r - 2L * sp.abs_mu() * sp.nu + 2;
        REQUIRE(2 * static_cast<long>(s.matrix.rows()) <= a * b);
    }
}

TEST_CASE("structured solver examples") {
    const SolveOutcome a = solve_structured(pow2k(), 0, 0);
    REQUIRE(a.pair.has_value());
    Telescoper one{{PolyN(1)}};
    CHECK(a.pair->L == one);
    CHECK(a.pair->C.value == RatFuncNK(1));

    const SolveOutcome b = solve_structured(example1(), 0, 0);
    CHECK_FALSE(b.pair.has_value());

    const ProperTerm h2 = example2();
    const SolveOutcome c = solve_structured(h2, 3, 24);
    CHECK(c.cols == 296);
    CHECK(c.rows <= 295);
    REQUIRE(c.pair.has_value());
    CHECK(verify_pair(h2, c.pair->L, c.pair->C.value));
    CHECK(numeric_spot_check(h2, c.pair->L, c.pair->C.value, 20) == 20);
    CHECK(c.pair->L.order() <= 3);
    CHECK(c.pair->L.degree().value_or(0) <= 24);
}

TEST_CASE("splittable terms are refused unless allowed") {
    ProperTerm q;
    q.factors = {make_gamma(true, 1, 1, 2), make_gamma(false, 1, 1, 0)};
    CHECK_THROWS_AS(solve_structured(q, 1, 2), PreconditionError);
    CHECK_THROWS_AS(solve_zeilberger(q, 2), PreconditionError);
    SolveOptions o;
    o.allow_splittable = true;
    CHECK_NOTHROW(solve_structured(q, 1, 2, o));
}

TEST_CASE("verification examples") {
    Telescoper one{{PolyN(1)}};
    CHECK(verify_pair(pow2k(), one, RatFuncNK(1)));
    CHECK_FALSE(verify_pair(pow2k(), one, RatFuncNK(0)));
    Telescoper zero{{PolyN()}};
    CHECK_FALSE(verify_pair(pow2k(), zero, RatFuncNK(0)));
    // binomial: (S_n - 2) binom(n,k) = Delta_k(-k/(n-k+1) binom(n,k))
    ProperTerm b;
    b.factors = {make_gamma(true, 1, 0, 1), make_gamma(false, 0, 1, 1), make_gamma(false, 1, -1, 1)};
    Telescoper L{{PolyN(-2), PolyN(1)}};
    const RatFuncNK C(-PolyNK::k(), lin(1, -1, 1));
    CHECK(verify_pair(b, L, C));
    CHECK(numeric_spot_check(b, L, C, 20) == 20);
    CHECK_FALSE(verify_pair(b, L, RatFuncNK(PolyNK::k(), lin(1, -1, 1))));
}

TEST_CASE("Zeilberger-style solver examples") {
    const auto a = solve_zeilberger(pow2k(), 2);
    REQUIRE(a.has_value());
    CHECK(a->order == 0);
    CHECK(verify_pair(pow2k(), a->pair.L, a->pair.C.value));

    const ProperTerm h = rising_term();
    const auto b = solve_zeilberger(h, 3);
    REQUIRE(b.has_value());
    CHECK(verify_pair(h, b->pair.L, b->pair.C.value));
    // the structured solver is an independent oracle at the same order
    SolveOptions o;
    o.slack = 2;
    o.force_uniform = true;
    bool structured_found = false;
    for (int d = 0; d <= 4 && !structured_found; ++d)
        structured_found = solve_structured(h, b->order, d, o).pair.has_value();
    CHECK(structured_found);
    CHECK(numeric_spot_check(h, b->pair.L, b->pair.C.value, 20) == 20);
}

TEST_CASE("Zeilberger-style solver finds the first example by order 8") {
    const ProperTerm h = example1();
    const auto z = solve_zeilberger(h, 8);
    REQUIRE(z.has_value());
    CHECK(z->order <= 8);
    CHECK(verify_pair(h, z->pair.L, z->pair.C.value));
    CHECK(numeric_spot_check(h, z->pair.L, z->pair.C.value, 10) == 10);
}

TEST_CASE("points above the curve are solvable (randomized)") {
    std::mt19937 rng(34);
    for (int c = 0; c < 12; ++c) {
        const ProperTerm h = random_term(rng, 1, 1);
        const StructuralParams sp = structural_params(h);
        const CurveSpec curve = curve_nonrational(sp);
        for (int r = sp.nu; r <= sp.nu + 1; ++r) {
            const int d = std::max(dmin(curve, r), sp.abs_mu() * sp.nu);
            const LinearSystem s = assemble_system(h, degree_plan(sp, r, d));
            REQUIRE(s.columns.size() > s.matrix.rows());
            const SolveOutcome out = solve_structured(h, r, d);
            REQUIRE(out.pair.has_value());
            REQUIRE(verify_pair(h, out.pair->L, out.pair->C.value));
        }
    }
}

TEST_CASE("structured success implies Zeilberger-style success (randomized)") {
    std::mt19937 rng(35);
    std::uniform_int_distribution<int> rd(0, 2), dd(0, 3);
    int successes = 0;
    for (int c = 0; c < 25; ++c) {
        const ProperTerm h = random_term(rng, 1, 1);
        const int r = rd(rng), d = dd(rng);
        const SolveOutcome s = solve_structured(h, r, d);
        if (!s.pair) continue;
        ++successes;
        const auto z = solve_zeilberger(h, r);
        REQUIRE(z.has_value());
        REQUIRE(z->order <= r);
        REQUIRE(verify_pair(h, z->pair.L, z->pair.C.value));
    }
    CHECK(successes > 0);
}

TEST_CASE("region of 2^k is full") {
    const Region reg = region_scan(pow2k(), 2, 2);
    for (const auto& c : reg.cells) CHECK(c.exists);
}

TEST_CASE("regions are upward closed and verified (randomized)") {
    std::mt19937 rng(36);
    RegionOptions o;
    o.workers = 2;
    for (int c = 0; c < 6; ++c) {
        const ProperTerm h = random_term(rng, 1, 1);
        const Region reg = region_scan(h, 3, 5, o);
        check_region_closure(reg);
        for (const auto& cell : reg.cells) {
            if (!cell.exists) continue;
            REQUIRE(cell.verified);
            REQUIRE(cell.pair.has_value());
            REQUIRE(verify_pair(h, cell.pair->L, cell.pair->C.value));
        }
    }
}

TEST_CASE("region scan is deterministic across worker counts") {
    std::mt19937 rng(37);
    const ProperTerm h = random_term(rng, 1, 1);
    RegionOptions one, four;
    one.workers = 1;
    four.workers = 4;
    const Region a = region_scan(h, 3, 4, one), b = region_scan(h, 3, 4, four);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        REQUIRE(a.cells[i].exists == b.cells[i].exists);
        if (a.cells[i].pair) REQUIRE(a.cells[i].pair->L == b.cells[i].pair->L);
    }
}

} // TEST_SUITE

TEST_SUITE("telescope_slow") {

TEST_CASE("first example: the scanner marks every curve point for r = 4..8") {
    const ProperTerm h = example1();
    const CurveSpec curve = curve_nonrational(structural_params(h));
    SolveOptions o;
    o.force_uniform = true;
    o.slack = 2;
    for (int r = 4; r <= 8; ++r) {
        const int d = dmin(curve, r);
        const SolveOutcome out = solve_structured(h, r, d, o);
        INFO("r = " << r << ", d = " << d);
        REQUIRE(out.pair.has_value());
        CHECK(verify_pair(h, out.pair->L, out.pair->C.value));
    }
}

} // TEST_SUITE
