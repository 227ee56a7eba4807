#ifndef ODC_RATFUNC_HPP
#define ODC_RATFUNC_HPP

#include "odc/poly_n.hpp"
#include "odc/poly_nk.hpp"

#include <string>

namespace odc {

/// Rational function in n over Q, kept reduced with a monic denominator.
class RatFuncN {
public:
    RatFuncN() : den_(1) {}
    RatFuncN(const Rat& c) : num_(c), den_(1) {}
    RatFuncN(long c) : RatFuncN(Rat(c)) {}
    RatFuncN(const PolyN& p) : num_(p), den_(1) {}
    RatFuncN(PolyN num, PolyN den);

    const PolyN& num() const { return num_; }
    const PolyN& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncN operator-() const { return RatFuncN(-num_, den_); }
    friend RatFuncN operator+(const RatFuncN& a, const RatFuncN& b);
    friend RatFuncN operator-(const RatFuncN& a, const RatFuncN& b) { return a + (-b); }
    friend RatFuncN operator*(const RatFuncN& a, const RatFuncN& b);
    friend RatFuncN operator/(const RatFuncN& a, const RatFuncN& b);
    RatFuncN& operator+=(const RatFuncN& o) { return *this = *this + o; }
    RatFuncN& operator-=(const RatFuncN& o) { return *this = *this - o; }
    RatFuncN& operator*=(const RatFuncN& o) { return *this = *this * o; }
    friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFuncN shift(const Rat& t) const { return RatFuncN(num_.shift(t), den_.shift(t)); }
    std::string str() const;

private:
    PolyN num_;
    PolyN den_;
};

/// Rational function in n and k over Q. Normalized: gcd(num, den) = 1 and the
/// graded-lex leading coefficient of den is 1, so equal functions compare equal.
class RatFuncNK {
public:
    RatFuncNK() : den_(1) {}
    RatFuncNK(const Rat& c) : num_(c), den_(1) {}
    RatFuncNK(long c) : RatFuncNK(Rat(c)) {}
    RatFuncNK(const PolyNK& p) : num_(p), den_(1) {}
    RatFuncNK(PolyNK num, PolyNK den);
    /// For num and den already known to be coprime: only the leading
    /// coefficient of den is normalized.
    static RatFuncNK from_coprime(PolyNK num, PolyNK den);

    const PolyNK& num() const { return num_; }
    const PolyNK& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncNK operator-() const;
    friend RatFuncNK operator+(const RatFuncNK& a, const RatFuncNK& b);
    friend RatFuncNK operator-(const RatFuncNK& a, const RatFuncNK& b) { return a + (-b); }
    friend RatFuncNK operator*(const RatFuncNK& a, const RatFuncNK& b);
    friend RatFuncNK operator/(const RatFuncNK& a, const RatFuncNK& b);
    RatFuncNK& operator+=(const RatFuncNK& o) { return *this = *this + o; }
    RatFuncNK& operator*=(const RatFuncNK& o) { return *this = *this * o; }
    friend bool operator==(const RatFuncNK& a, const RatFuncNK& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncNK& a, const RatFuncNK& b) { return !(a == b); }

    /// Throws std::domain_error when the denominator vanishes at the point.
    Rat eval(const Rat& n, const Rat& k) const;
    std::string str() const;

    friend RatFuncNK shift(const RatFuncNK& f, long dn, long dk);

private:
    PolyNK num_;
    PolyNK den_;
};

RatFuncNK shift(const RatFuncNK& f, long dn, long dk);

/// Equality of a/b and c/d by cross-multiplication, without normalizing.
bool cross_equal(const PolyNK& a, const PolyNK& b, const PolyNK& c, const PolyNK& d);

} // namespace odc

#endif
