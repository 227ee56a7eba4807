#ifndef ODC_POLY_NK_HPP
#define ODC_POLY_NK_HPP

#include "odc/poly_n.hpp"
#include "odc/rat.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace odc {

/// Exponent pair n^n k^k.
struct Mono {
    int n = 0;
    int k = 0;
    int total() const { return n + k; }
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Graded-lex comparison with n > k: total degree first, then the n-exponent.
inline bool grlex_less(const Mono& a, const Mono& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.n < b.n;
}

struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(a, b); }
};

/// Sparse polynomial in n and k over Q. No zero coefficients are stored;
/// terms are kept in graded-lex order so the leading term is the last one.
class PolyNK {
public:
    using Terms = std::map<Mono, Rat, GrlexLess>;

    PolyNK() = default;
    PolyNK(const Rat& c);
    PolyNK(long c) : PolyNK(Rat(c)) {}
    /// Embeds a polynomial in n.
    explicit PolyNK(const PolyN& p);

    static PolyNK n();
    static PolyNK k();
    static PolyNK monomial(const Rat& c, int n_exp, int k_exp);
    /// cn*n + ck*k + c0.
    static PolyNK linear(const Rat& cn, const Rat& ck, const Rat& c0);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rat coeff(int n_exp, int k_exp) const;

    Degree degree() const;
    Degree degree_n() const;
    Degree degree_k() const;

    /// Leading monomial and coefficient under graded-lex, n > k.
    Mono leading_mono() const;
    const Rat& lc() const;

    PolyNK operator-() const;
    PolyNK& operator+=(const PolyNK& o);
    PolyNK& operator-=(const PolyNK& o);
    PolyNK& operator*=(const PolyNK& o);
    PolyNK& operator*=(const Rat& c);
    void add_term(const Mono& m, const Rat& c);

    friend PolyNK operator+(PolyNK a, const PolyNK& b) { return a += b; }
    friend PolyNK operator-(PolyNK a, const PolyNK& b) { return a -= b; }
    friend PolyNK operator*(const PolyNK& a, const PolyNK& b);
    friend PolyNK operator*(PolyNK a, const Rat& c) { return a *= c; }
    friend PolyNK operator*(const Rat& c, PolyNK a) { return a *= c; }
    friend PolyNK operator*(PolyNK a, long c) { return a *= Rat(c); }
    friend PolyNK operator*(long c, PolyNK a) { return a *= Rat(c); }
    friend bool operator==(const PolyNK& a, const PolyNK& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyNK& a, const PolyNK& b) { return !(a == b); }

    PolyNK pow(int e) const;
    Rat eval(const Rat& n, const Rat& k) const;
    /// Substitutes k := value (a polynomial in n and k) and expands.
    PolyNK substitute_k(const PolyNK& value) const;

    /// Coefficients of k^0, k^1, ... as polynomials in n.
    std::vector<PolyN> coeffs_in_k() const;
    static PolyNK from_coeffs_in_k(const std::vector<PolyN>& cs);
    /// True when the polynomial does not involve k.
    bool is_k_free() const;
    /// Only valid when is_k_free().
    PolyN as_poly_n() const;

    /// Throws std::domain_error unless d divides *this exactly.
    PolyNK exact_div(const PolyNK& d) const;
    /// Quotient when d divides exactly, nullopt otherwise.
    std::optional<PolyNK> try_div(const PolyNK& d) const;
    /// Positive rational making the polynomial integral with gcd 1.
    Rat content() const;
    PolyNK primitive() const;

    std::string str() const;

private:
    Terms terms_;
};

/// p(p+1)...(p+m-1); rf(p,0) = 1.
PolyNK rising_factorial(const PolyNK& p, int m);

/// p with n -> n+dn, k -> k+dk.
PolyNK shift(const PolyNK& p, const Rat& dn, const Rat& dk);
PolyNK shift(const PolyNK& p, long dn, long dk);

/// Greatest common divisor, normalized to leading coefficient 1 (graded-lex).
/// gcd(0, 0) = 0.
PolyNK gcd(const PolyNK& a, const PolyNK& b);

} // namespace odc

#endif
