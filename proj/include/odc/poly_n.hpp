#ifndef ODC_POLY_N_HPP
#define ODC_POLY_N_HPP

#include "odc/rat.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odc {

/// Dense univariate polynomial in n over Q. Coefficients are stored from the
/// constant term upwards with no trailing zeros; the zero polynomial is empty.
class PolyN {
public:
    PolyN() = default;
    PolyN(const Rat& c);
    PolyN(long c) : PolyN(Rat(c)) {}
    explicit PolyN(std::vector<Rat> coeffs);
    PolyN(std::initializer_list<long> coeffs);

    static PolyN n() { return PolyN(std::vector<Rat>{Rat(0), Rat(1)}); }
    static PolyN monomial(const Rat& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Degree degree() const;
    /// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
    int length() const { return static_cast<int>(coeffs_.size()); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    const Rat& lc() const;

    PolyN operator-() const;
    PolyN& operator+=(const PolyN& o);
    PolyN& operator-=(const PolyN& o);
    PolyN& operator*=(const PolyN& o);
    PolyN& operator*=(const Rat& c);

    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(const PolyN& a, const PolyN& b);
    friend PolyN operator*(PolyN a, const Rat& c) { return a *= c; }
    friend PolyN operator*(const Rat& c, PolyN a) { return a *= c; }
    friend PolyN operator*(PolyN a, long c) { return a *= Rat(c); }
    friend PolyN operator*(long c, PolyN a) { return a *= Rat(c); }
    friend bool operator==(const PolyN& a, const PolyN& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyN& a, const PolyN& b) { return !(a == b); }

    /// p(n + t).
    PolyN shift(const Rat& t) const;
    Rat eval(const Rat& x) const;

    /// Quotient and remainder of Euclidean division over Q.
    std::pair<PolyN, PolyN> divmod(const PolyN& d) const;
    /// Throws std::domain_error unless d divides *this.
    PolyN exact_div(const PolyN& d) const;

    PolyN monic() const;
    /// Positive rational c with *this / c primitive in Z[n] (leading coefficient
    /// sign preserved). Zero for the zero polynomial.
    Rat content() const;
    /// *this / content(): integer coefficients with gcd 1.
    PolyN primitive() const;
    /// Sum of coefficient bit sizes; a pivot-size measure.
    std::size_t bit_size() const;

    std::string str(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyN gcd(const PolyN& a, const PolyN& b);
PolyN lcm(const PolyN& a, const PolyN& b);

/// p(p+1)...(p+m-1) for a univariate polynomial.
PolyN rising_factorial(const PolyN& p, int m);
/// All roots with multiplicity when f splits into linear factors over Q,
/// nullopt otherwise. Roots are returned in decreasing order.
std::optional<std::vector<Rat>> split_rational_roots(const PolyN& f);

} // namespace odc

#endif
