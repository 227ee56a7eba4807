#ifndef ODC_TEST_SUPPORT_HPP
#define ODC_TEST_SUPPORT_HPP

#include "odc/hyperterm.hpp"
#include "odc/poly_n.hpp"
#include "odc/poly_nk.hpp"
#include "odc/ratfunc.hpp"
#include "odc/telescoper.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

#ifndef ODC_FIXTURE_DIR
#define ODC_FIXTURE_DIR "tests/fixtures"
#endif

namespace odc::testing {

inline std::string fixture(const std::string& rel) { return std::string(ODC_FIXTURE_DIR) + "/" + rel; }

inline PolyNK lin(long cn, long ck, long c0) { return PolyNK::linear(Rat(cn), Rat(ck), Rat(c0)); }

inline ProperTerm example1() {
    ProperTerm h;
    h.p = PolyNK::n().pow(2) + PolyNK::k().pow(2) + PolyNK(1);
    h.factors = {make_gamma(true, 2, 3, 0), make_gamma(false, 2, -1, 0)};
    return h;
}

inline ProperTerm example2() {
    ProperTerm h;
    h.factors = {make_gamma(true, 2, 1, 0), make_gamma(true, 1, -1, 2), make_gamma(false, 2, -1, 0),
                 make_gamma(false, 1, 2, 0)};
    return h;
}

inline ProperTerm pow2k() {
    ProperTerm h;
    h.y = 2;
    return h;
}

// Gamma(z + m) / Gamma(z) as an explicit product; nullopt when a pole or a
// zero is hit on the way.
inline std::optional<Rat> gamma_shift_ratio(const Rat& z, long m) {
    Rat out = 1;
    if (m >= 0) {
        for (long t = 0; t < m; ++t) {
            const Rat f = z + t;
            if (f == 0) return std::nullopt;
            out *= f;
        }
    } else {
        for (long t = 1; t <= -m; ++t) {
            const Rat f = z - t;
            if (f == 0) return std::nullopt;
            out /= f;
        }
    }
    // Gamma(z) itself must be finite
    if (is_integer(z) && z <= 0) return std::nullopt;
    if (is_integer(z + m) && z + m <= 0) return std::nullopt;
    return out;
}

// h(n0 + dn, k0 + dk) / h(n0, k0) straight from the term's definition.
inline std::optional<Rat> term_ratio(const ProperTerm& h, const Rat& n0, const Rat& k0, long dn, long dk) {
    const Rat p0 = h.p.eval(n0, k0);
    if (p0 == 0) return std::nullopt;
    Rat out = h.p.eval(n0 + dn, k0 + dk) / p0;
    for (long i = 0; i < (dn < 0 ? -dn : dn); ++i) out = dn > 0 ? Rat(out * h.x) : Rat(out / h.x);
    for (long i = 0; i < (dk < 0 ? -dk : dk); ++i) out = dk > 0 ? Rat(out * h.y) : Rat(out / h.y);
    for (const auto& g : h.factors) {
        const long sgn = k_enters_negated(g.family) ? -1 : 1;
        const Rat z = Rat(g.cn) * n0 + Rat(sgn * g.ck) * k0 + g.c0;
        const long m = g.cn * dn + sgn * g.ck * dk;
        const auto q = gamma_shift_ratio(z, m);
        if (!q) return std::nullopt;
        out = in_numerator(g.family) ? Rat(out * *q) : Rat(out / *q);
    }
    return out;
}

inline std::optional<Rat> eval_ratfunc(const RatFuncNK& f, const Rat& n0, const Rat& k0) {
    const Rat d = f.den().eval(n0, k0);
    if (d == 0) return std::nullopt;
    return f.num().eval(n0, k0) / d;
}

// Checks sum_i l_i(n0) h(n0+i,k0) = C(n0,k0+1) h(n0,k0+1) - C(n0,k0) h(n0,k0)
// (divided by h(n0,k0)) at `points` admissible points. n0 is an integer; every
// other k0 is offset by 1/7 to step around Gamma poles. Returns the number of
// points checked, or -1 on the first mismatch.
inline int numeric_spot_check(const ProperTerm& h, const Telescoper& L, const RatFuncNK& C, int points,
                              unsigned seed = 7) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(3, 40);
    int checked = 0;
    for (int attempt = 0; attempt < 50 * points && checked < points; ++attempt) {
        const Rat n0(dist(rng));
        const Rat k0 = Rat(dist(rng) - 2) + (attempt % 2 ? make_rat(1, 7) : Rat(0));
        Rat lhs = 0;
        bool ok = true;
        for (int i = 0; i <= L.order() && ok; ++i) {
            const auto q = term_ratio(h, n0, k0, i, 0);
            if (!q) ok = false;
            else lhs += L.coeffs[static_cast<std::size_t>(i)].eval(n0) * *q;
        }
        const auto q1 = term_ratio(h, n0, k0, 0, 1);
        const auto c0 = eval_ratfunc(C, n0, k0);
        const auto c1 = eval_ratfunc(C, n0, k0 + 1);
        if (!ok || !q1 || !c0 || !c1) continue;
        if (lhs != *c1 * *q1 - *c0) return -1;
        ++checked;
    }
    return checked;
}

inline Rat random_rat(std::mt19937& rng, int num_bound, int den_bound = 1) {
    std::uniform_int_distribution<int> nd(-num_bound, num_bound), dd(1, den_bound);
    return make_rat(nd(rng), dd(rng));
}

inline PolyN random_poly_n(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    const int deg = dd(rng);
    std::vector<Rat> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(random_rat(rng, bound, 3));
    return PolyN(cs);
}

inline PolyNK random_poly_nk(std::mt19937& rng, int max_total, int terms, int bound) {
    std::uniform_int_distribution<int> ed(0, max_total), td(0, terms);
    PolyNK p;
    const int t = td(rng);
    for (int i = 0; i < t; ++i) {
        const int a = ed(rng);
        std::uniform_int_distribution<int> bd(0, max_total - a);
        p.add_term(Mono{a, bd(rng)}, random_rat(rng, bound, 2));
    }
    return p;
}

// A random term with at most one factor per family (M = 1), n- and
// k-coefficients at most `coef`, and deg p at most `pdeg`. Splittable draws are
// rejected.
inline ProperTerm random_term(std::mt19937& rng, int coef, int pdeg) {
    std::uniform_int_distribution<int> cd(0, coef), c0d(0, 3), coin(0, 1), xd(1, 3);
    for (;;) {
        ProperTerm h;
        do {
            h.p = random_poly_nk(rng, pdeg, 3, 3);
        } while (h.p.is_zero());
        h.x = Rat(coin(rng) ? xd(rng) : -xd(rng));
        h.y = Rat(coin(rng) ? 1 : xd(rng));
        const Family fams[] = {Family::A, Family::B, Family::U, Family::V};
        for (Family f : fams) {
            if (!coin(rng)) continue;
            GammaArg g;
            g.family = f;
            g.cn = cd(rng);
            g.ck = cd(rng);
            g.c0 = Rat(c0d(rng) + 1);
            if (g.ck == 0) g.family = in_numerator(f) ? Family::A : Family::U;
            h.factors.push_back(g);
        }
        if (!detect_splittable(h)) return h;
    }
}

} // namespace odc::testing

#endif
