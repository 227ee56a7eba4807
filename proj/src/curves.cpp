#include "odc/curves.hpp"

#include <algorithm>

namespace odc {

Rat CurveSpec::eval(int r) const {
    if (r < rmin) throw PreconditionError("order below the curve's threshold");
    const Rat x(r);
    const Rat dv = den.eval(x);
    if (dv <= 0) throw std::logic_error("curve denominator not positive");
    return num.eval(x) / dv;
}

std::string CurveSpec::str() const { return "(" + num.str("r") + ")/(" + den.str("r") + ")"; }

RationalParams RationalParams::from(const DecomposedInput& inp) {
    RationalParams rp;
    for (const auto& part : inp.parts) {
        rp.a.push_back(part.f.a);
        rp.ap.push_back(part.f.ap);
        rp.delta.push_back(part.V.degree().value_or(0));
    }
    rp.deg_u = inp.deg_u();
    return rp;
}

int RationalParams::sum_ap() const {
    int s = 0;
    for (int x : ap) s += x;
    return s;
}

int RationalParams::sum_ap_delta() const {
    int s = 0;
    for (std::size_t i = 0; i < ap.size(); ++i) s += ap[i] * delta[i];
    return s;
}

CurveSpec curve_nonrational(const StructuralParams& sp) {
    const int amu = sp.abs_mu();
    const int nu = sp.nu;
    CurveSpec c;
    c.kind = CurveCase::Nonrational;
    // ((theta nu - 1) r + nu (2 delta + |mu| + 3 - (1 + |mu|) nu)/2 - 1) / (r - nu + 1)
    const Rat c0 = make_rat(nu * (2 * sp.delta + amu + 3 - (1 + amu) * nu), 2) - 1;
    c.num = PolyN(std::vector<Rat>{c0, Rat(sp.theta * nu - 1)});
    c.den = PolyN(std::vector<Rat>{Rat(1 - nu), Rat(1)});
    c.rmin = nu;
    return c;
}

CurveSpec curve_rational(const RationalParams& rp) {
    const int A = rp.sum_ap();
    const int S = rp.sum_ap_delta();
    CurveSpec c;
    c.kind = CurveCase::Rational;
    // (-r - 1 + S)/(r + 1 - A) + deg u over the common denominator
    c.den = PolyN(std::vector<Rat>{Rat(1 - A), Rat(1)});
    c.num = PolyN(std::vector<Rat>{Rat(S - 1), Rat(-1)}) + c.den * Rat(rp.deg_u);
    c.rmin = A;
    return c;
}

Rat bound_nonrational(const StructuralParams& sp, int r) { return curve_nonrational(sp).eval(r); }
Rat bound_rational(const RationalParams& rp, int r) { return curve_rational(rp).eval(r); }
Rat bound_rational(const DecomposedInput& inp, int r) { return bound_rational(RationalParams::from(inp), r); }

int dmin(const CurveSpec& curve, int r) {
    const Integer f = floor_rat(curve.eval(r)) + 1;
    return f < 0 ? 0 : static_cast<int>(f.get_si());
}

bool satisfies(const CurveSpec& curve, int r, int d) { return r >= curve.rmin && Rat(d) > curve.eval(r); }

namespace {

int ceil_half(long twice) { return static_cast<int>(ceil_rat(make_rat(twice, 2)).get_si()); }

} // namespace

std::pair<CurvePoint, CurvePoint> corollary_nonrational(const StructuralParams& sp) {
    const long nu = sp.nu, delta = sp.delta, theta = sp.theta, amu = sp.abs_mu();
    CurvePoint p1{static_cast<int>(nu), ceil_half(nu * (2 * delta + 2 * nu * theta + amu - nu * amu)), false};
    CurvePoint p2{ceil_half(nu * (1 + 2 * delta + 2 * (nu - 1) * (theta - amu))), static_cast<int>(theta * nu), false};
    const CurveSpec c = curve_nonrational(sp);
    p1.satisfies = satisfies(c, p1.r, p1.d);
    p2.satisfies = satisfies(c, p2.r, p2.d);
    return {p1, p2};
}

std::pair<CurvePoint, CurvePoint> corollary_rational(const RationalParams& rp, OrderReading reading) {
    int d1 = rp.deg_u;
    for (std::size_t i = 0; i < rp.ap.size(); ++i) d1 += (rp.delta[i] - 1) * rp.ap[i];
    int r2 = 0;
    for (std::size_t i = 0; i < rp.ap.size(); ++i)
        r2 += (reading == OrderReading::Ap ? rp.ap[i] : rp.a[i]) * rp.delta[i];
    // constant V_i (delta_i = 0) can drive the sum below zero
    CurvePoint p1{rp.sum_ap(), std::max(d1, 0), false};
    CurvePoint p2{r2, rp.deg_u, false};
    const CurveSpec c = curve_rational(rp);
    p1.satisfies = satisfies(c, p1.r, p1.d);
    p2.satisfies = satisfies(c, p2.r, p2.d);
    return {p1, p2};
}

Rat cost(const CostModel& model, int r, int d) {
    if (r < 0 || d < 0) throw PreconditionError("order and degree must be nonnegative");
    const Rat R(r), D(d);
    if (model.kind == CurveCase::Rational) return model.kappa * R * R * R * D;
    const auto& sp = model.sp;
    const Rat m = Rat(sp.theta + 1) * R + sp.delta + 2;
    const Rat t = Rat(sp.delta) + Rat(sp.theta) * R + D - Rat((sp.abs_mu() + 1) * sp.nu) + 1;
    return model.kappa * m * m * m * t;
}

std::vector<CostRow> cost_table(const CostModel& model, const CurveSpec& curve, int rmin, int rmax) {
    std::vector<CostRow> rows;
    for (int r = std::max(rmin, curve.rmin); r <= rmax; ++r) {
        const int d = dmin(curve, r);
        rows.push_back({r, d, cost(model, r, d)});
    }
    return rows;
}

CostRow suggest_order(const CostModel& model, const CurveSpec& curve, int rmax) {
    if (rmax < curve.rmin) throw PreconditionError("rmax below the curve's threshold");
    const auto rows = cost_table(model, curve, curve.rmin, rmax);
    CostRow best = rows.front();
    for (const auto& row : rows)
        if (row.cost < best.cost) best = row;
    return best;
}

} // namespace odc
