#ifndef ODC_CURVES_HPP
#define ODC_CURVES_HPP

#include "odc/hyperterm.hpp"
#include "odc/poly_n.hpp"
#include "odc/ratcase.hpp"

#include <string>
#include <vector>

namespace odc {

enum class CurveCase { Nonrational, Rational };

/// Degree bound num(r)/den(r) valid for r >= rmin; a telescoper of order r and
/// degree d is guaranteed for every integer d strictly above it. Numerator and
/// denominator are polynomials in r (stored as PolyN).
struct CurveSpec {
    CurveCase kind = CurveCase::Nonrational;
    PolyN num;
    PolyN den;
    int rmin = 0;

    Rat eval(int r) const;
    /// "(7*r + 5)/(r - 3)"
    std::string str() const;
};

/// Summary data of a decomposed rational input used by the curve formulas.
struct RationalParams {
    std::vector<int> a;     ///< n-coefficients a_i
    std::vector<int> ap;    ///< k-coefficients a_i'
    std::vector<int> delta; ///< operator degrees delta_i
    int deg_u = 0;

    static RationalParams from(const DecomposedInput& inp);
    int sum_ap() const;
    int sum_ap_delta() const;
};

CurveSpec curve_nonrational(const StructuralParams& sp);
CurveSpec curve_rational(const RationalParams& rp);

/// Exact bound; throws PreconditionError for r below the threshold.
Rat bound_nonrational(const StructuralParams& sp, int r);
Rat bound_rational(const RationalParams& rp, int r);
Rat bound_rational(const DecomposedInput& inp, int r);

/// Smallest nonnegative integer strictly above the bound.
int dmin(const CurveSpec& curve, int r);

struct CurvePoint {
    int r = 0;
    int d = 0;
    /// r >= rmin and d above the bound at r.
    bool satisfies = false;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool satisfies(const CurveSpec& curve, int r, int d);

std::pair<CurvePoint, CurvePoint> corollary_nonrational(const StructuralParams& sp);

/// Which coefficients weight the order of the second rational point: the
/// validated a_i' (default) or the plain a_i.
enum class OrderReading { Ap, A };

std::pair<CurvePoint, CurvePoint> corollary_rational(const RationalParams& rp,
                                                     OrderReading reading = OrderReading::Ap);

struct CostModel {
    CurveCase kind = CurveCase::Nonrational;
    Rat kappa = 1;
    StructuralParams sp;
    int deg_u = 0;
};

Rat cost(const CostModel& model, int r, int d);

struct CostRow {
    int r = 0;
    int d = 0;
    Rat cost;
};

std::vector<CostRow> cost_table(const CostModel& model, const CurveSpec& curve, int rmin, int rmax);

/// argmin over r in [rmin, rmax] of cost(r, dmin(r)); ties go to the smaller r.
CostRow suggest_order(const CostModel& model, const CurveSpec& curve, int rmax);

} // namespace odc

#endif
