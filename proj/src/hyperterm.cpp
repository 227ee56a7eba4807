#include "odc/hyperterm.hpp"

#include <map>
#include <tuple>

namespace odc {

PolyNK GammaArg::argument() const {
    return PolyNK::linear(Rat(cn), Rat(k_enters_negated(family) ? -ck : ck), c0);
}

GammaArg make_gamma(bool numerator, int cn, int ck_signed, const Rat& c0) {
    if (cn < 0) throw PreconditionError("negative n-coefficient in Gamma argument");
    GammaArg g;
    g.cn = cn;
    g.ck = ck_signed < 0 ? -ck_signed : ck_signed;
    g.c0 = c0;
    if (numerator)
        g.family = ck_signed < 0 ? Family::B : Family::A;
    else
        g.family = ck_signed < 0 ? Family::V : Family::U;
    return g;
}

void ProperTerm::validate() const {
    if (p.is_zero()) throw PreconditionError("polynomial part is zero");
    if (x == 0 || y == 0) throw PreconditionError("geometric parts must be nonzero");
    for (const auto& g : factors)
        if (g.cn < 0 || g.ck < 0) throw PreconditionError("Gamma coefficients must be nonnegative");
}

RatFuncNK sigma_n(const ProperTerm& h) {
    PolyNK num = shift(h.p, 1, 0) * h.x;
    PolyNK den = h.p;
    for (const auto& g : h.factors) {
        PolyNK f = rising_factorial(g.argument(), g.cn);
        if (in_numerator(g.family))
            num *= f;
        else
            den *= f;
    }
    return RatFuncNK(num, den);
}

RatFuncNK sigma_k(const ProperTerm& h) {
    PolyNK num = shift(h.p, 0, 1) * h.y;
    PolyNK den = h.p;
    for (const auto& g : h.factors) {
        const PolyNK arg = g.argument();
        switch (g.family) {
        case Family::A: num *= rising_factorial(arg, g.ck); break;
        case Family::U: den *= rising_factorial(arg, g.ck); break;
        case Family::B: den *= rising_factorial(arg - PolyNK(Rat(g.ck)), g.ck); break;
        case Family::V: num *= rising_factorial(arg - PolyNK(Rat(g.ck)), g.ck); break;
        }
    }
    return RatFuncNK(num, den);
}

StructuralParams structural_params(const ProperTerm& h) {
    int num_n = 0, den_n = 0, av_k = 0, ub_k = 0;
    for (const auto& g : h.factors) {
        (in_numerator(g.family) ? num_n : den_n) += g.cn;
        (g.family == Family::A || g.family == Family::V ? av_k : ub_k) += g.ck;
    }
    StructuralParams sp;
    sp.delta = h.p.degree().value_or(0);
    sp.theta = std::max(num_n, den_n);
    sp.lambda = den_n;
    sp.mu = num_n - den_n;
    sp.nu = std::max(av_k, ub_k);
    return sp;
}

bool detect_splittable(const ProperTerm& h) {
    if (h.y != 1) return false;
    // Balance per class (cn, ck, fractional part of c0): numerator factors count
    // +1, their cancelling partners -1.
    using Key = std::tuple<bool, int, int, Rat>;
    std::map<Key, int> balance;
    for (const auto& g : h.factors) {
        if (g.ck == 0) continue;
        Rat frac = g.c0 - Rat(floor_rat(g.c0));
        const bool minus_k = k_enters_negated(g.family);
        balance[Key{minus_k, g.cn, g.ck, frac}] += in_numerator(g.family) ? 1 : -1;
    }
    for (const auto& [key, count] : balance)
        if (count != 0) return false;
    return true;
}

} // namespace odc
