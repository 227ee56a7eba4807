#ifndef ODC_RATCASE_HPP
#define ODC_RATCASE_HPP

#include "odc/poly_n.hpp"
#include "odc/poly_nk.hpp"
#include "odc/ratfunc.hpp"
#include "odc/telescoper.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace odc {

/// Element of Q[n][S_n]: coeffs[t] multiplies S_n^t. Trailing zero
/// coefficients are removed, so the order is the top index.
struct RecOperator {
    std::vector<PolyN> coeffs;

    RecOperator() = default;
    explicit RecOperator(std::vector<PolyN> c);

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    Degree degree() const;
    bool is_zero() const { return coeffs.empty(); }
    /// Copy scaled to integer coefficients with content 1 and positive leading
    /// coefficient in the top entry.
    RecOperator normalized() const;
    std::string str() const;
    friend bool operator==(const RecOperator&, const RecOperator&) = default;
};

/// Element of Q(n)[S_n].
struct RatOperator {
    std::vector<RatFuncN> coeffs;

    RatOperator() = default;
    explicit RatOperator(std::vector<RatFuncN> c);
    explicit RatOperator(const RecOperator& op);
    explicit RatOperator(const Telescoper& L);

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const RatOperator&, const RatOperator&) = default;
};

/// Product in the skew ring where S_n c(n) = c(n+1) S_n.
RatOperator operator*(const RatOperator& a, const RatOperator& b);
RatOperator operator+(const RatOperator& a, const RatOperator& b);
RatOperator operator-(const RatOperator& a, const RatOperator& b);

/// R with A = T B + R and order(R) < order(B). Throws PreconditionError if B = 0.
RatOperator right_remainder(const RatOperator& A, const RatOperator& B);

/// f = (a n + ap k + app)^(-e).
struct RationalSummand {
    int a = 0;
    int ap = 1;
    Rat app;
    int e = 1;

    PolyNK linear() const { return PolyNK::linear(Rat(a), Rat(ap), app); }
    /// Throws PreconditionError unless ap > 0, e > 0, gcd(a, ap) = 1.
    void validate() const;
    friend bool operator==(const RationalSummand&, const RationalSummand&) = default;
};

struct DecomposedPart {
    RecOperator V;
    RationalSummand f;
    friend bool operator==(const DecomposedPart&, const DecomposedPart&) = default;
};

/// h = (1/u) sum_i V_i(f_i).
struct DecomposedInput {
    PolyN u = PolyN(1);
    std::vector<DecomposedPart> parts;

    /// Checks the summand invariants and, for parts with equal exponents, that
    /// (a_i/ap_i - a_j/ap_j) n + (app_i/ap_i - app_j/ap_j) is not an integer.
    void validate() const;
    int sum_ap() const;
    int deg_u() const { return u.degree().value_or(0); }
    friend bool operator==(const DecomposedInput&, const DecomposedInput&) = default;
};

/// Structural failure of decompose; kind names the reason.
class DecomposeError : public std::invalid_argument {
public:
    enum Kind { NonIntegerLinear, NotAbramovReduced, Improper };
    DecomposeError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// sum_t c_t(n) (a(n+t) + ap k + app)^(-e).
RatFuncNK apply_operator(const RecOperator& V, const RationalSummand& f);

/// (1/u) sum_i V_i(f_i) as a single rational function.
RatFuncNK recompose(const DecomposedInput& inp);

/// Partial fractions of p/q in k, grouped by n-shift classes. The denominator
/// must factor into integer-linear forms involving k (k-free factors go into
/// u); deg_k p < deg_k q; distinct classes must not be k-shifts of each other.
DecomposedInput decompose(const PolyNK& p, const PolyNK& q);
DecomposedInput decompose(const RatFuncNK& h);

struct AnsatzCounts {
    long columns = 0;
    long rows = 0;
};

/// Unknowns and equations of the joint ansatz L~ V_i = R_i (S_n^ap_i - 1) with
/// L~ of order r and degree d - deg u.
AnsatzCounts rational_ansatz_counts(const DecomposedInput& inp, int r, int d);

/// Telescoper L = L~ u of order r and degree at most d. The R_i are eliminated
/// by reducing L~ V_i modulo S_n^ap_i - 1. Requires r >= sum ap_i and d >= deg u.
std::optional<Telescoper> solve_rational(const DecomposedInput& inp, int r, int d);

/// True when every right remainder of L (1/u) V_i by S_n^ap_i - 1 vanishes.
bool verify_rational(const DecomposedInput& inp, const Telescoper& L);

/// Telescoper for q h0 from a telescoper L of q, where S_n(h0)/h0 = a/b.
Telescoper lift(const Telescoper& L, const PolyN& a, const PolyN& b);

} // namespace odc

#endif
