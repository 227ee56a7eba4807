#ifndef ODC_TELESCOPER_HPP
#define ODC_TELESCOPER_HPP

#include "odc/poly_n.hpp"
#include "odc/ratfunc.hpp"

#include <string>
#include <vector>

namespace odc {

/// l_0 + l_1 S_n + ... + l_r S_n^r with coefficients in Q[n]. The order is the
/// declared length minus one; the top coefficient may be zero when the
/// operator was padded to a larger order.
struct Telescoper {
    std::vector<PolyN> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Largest coefficient degree; nullopt for the zero operator.
    Degree degree() const;
    bool is_zero() const;
    /// Divides by the common rational content so the coefficients are integer
    /// polynomials with content 1 and the top nonzero coefficient has positive
    /// leading coefficient. Returns the factor divided out.
    Rat normalize();
    std::string str() const;

    friend bool operator==(const Telescoper&, const Telescoper&) = default;
};

struct Certificate {
    RatFuncNK value;
};

struct TelescoperPair {
    Telescoper L;
    Certificate C;
};

} // namespace odc

#endif
