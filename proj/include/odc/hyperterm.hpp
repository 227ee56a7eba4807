#ifndef ODC_HYPERTERM_HPP
#define ODC_HYPERTERM_HPP

#include "odc/poly_nk.hpp"
#include "odc/ratfunc.hpp"

#include <string>
#include <vector>

namespace odc {

/// Where a Gamma factor sits and with which sign k enters its argument.
enum class Family {
    A, ///< numerator, +k
    B, ///< numerator, -k
    U, ///< denominator, +k
    V, ///< denominator, -k
};

inline bool in_numerator(Family f) { return f == Family::A || f == Family::B; }
inline bool k_enters_negated(Family f) { return f == Family::B || f == Family::V; }

/// One factor Gamma(cn*n +/- ck*k + c0), in the numerator or the denominator.
struct GammaArg {
    int cn = 0;
    int ck = 0;
    Rat c0;
    Family family = Family::A;

    /// The argument as a polynomial, with the family's sign applied to ck.
    PolyNK argument() const;
    friend bool operator==(const GammaArg&, const GammaArg&) = default;
};

/// Builds a factor from the signed k-coefficient of its argument; the family
/// follows from numerator/denominator position and the sign. A zero
/// k-coefficient lands in A (numerator) or U (denominator).
GammaArg make_gamma(bool numerator, int cn, int ck_signed, const Rat& c0);

/// p * x^n * y^k * prod Gamma(...)^(+/-1).
struct ProperTerm {
    PolyNK p = PolyNK(1);
    Rat x = 1;
    Rat y = 1;
    std::vector<GammaArg> factors;

    /// Throws PreconditionError when p = 0, x = 0, y = 0 or a factor has a
    /// negative coefficient.
    void validate() const;
    friend bool operator==(const ProperTerm&, const ProperTerm&) = default;
};

struct StructuralParams {
    int delta = 0;
    int theta = 0;
    int lambda = 0;
    int mu = 0;
    int nu = 0;

    int abs_mu() const { return mu < 0 ? -mu : mu; }
    friend bool operator==(const StructuralParams&, const StructuralParams&) = default;
};

/// S_n(h)/h.
RatFuncNK sigma_n(const ProperTerm& h);
/// S_k(h)/h.
RatFuncNK sigma_k(const ProperTerm& h);

StructuralParams structural_params(const ProperTerm& h);

/// Sufficient test for h = q * h0 with q rational and h0 free of k: y = 1 and
/// the Gamma factors involving k cancel in pairs (A with U, B with V) whose
/// arguments differ by an integer. False means "not detected", not "cannot split".
bool detect_splittable(const ProperTerm& h);

} // namespace odc

#endif
