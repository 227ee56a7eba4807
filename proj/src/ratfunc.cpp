#include "odc/ratfunc.hpp"

namespace odc {

RatFuncN::RatFuncN(PolyN num, PolyN den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = PolyN(1);
        return;
    }
    PolyN g = gcd(num, den);
    if (!g.is_constant()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    Rat s = 1 / den.lc();
    num_ = num * s;
    den_ = den * s;
}

RatFuncN operator+(const RatFuncN& a, const RatFuncN& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFuncN(a.num_ + b.num_, a.den_);
    PolyN g = gcd(a.den_, b.den_);
    PolyN bd = b.den_.exact_div(g);
    return RatFuncN(a.num_ * bd + b.num_ * a.den_.exact_div(g), a.den_ * bd);
}

RatFuncN operator*(const RatFuncN& a, const RatFuncN& b) {
    return RatFuncN(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncN operator/(const RatFuncN& a, const RatFuncN& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFuncN(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFuncN::str() const {
    if (den_ == PolyN(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncNK::RatFuncNK(PolyNK num, PolyNK den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = PolyNK(1);
        return;
    }
    PolyNK g = gcd(num, den);
    if (!g.is_constant()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    Rat s = 1 / den.lc();
    num_ = num * s;
    den_ = den * s;
}

RatFuncNK RatFuncNK::from_coprime(PolyNK num, PolyNK den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFuncNK r;
    if (num.is_zero()) return r;
    const Rat s = 1 / den.lc();
    r.num_ = num * s;
    r.den_ = den * s;
    return r;
}

RatFuncNK RatFuncNK::operator-() const {
    RatFuncNK r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncNK operator+(const RatFuncNK& a, const RatFuncNK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFuncNK(a.num_ + b.num_, a.den_);
    PolyNK g = gcd(a.den_, b.den_);
    PolyNK bd = b.den_.exact_div(g);
    return RatFuncNK(a.num_ * bd + b.num_ * a.den_.exact_div(g), a.den_ * bd);
}

RatFuncNK operator*(const RatFuncNK& a, const RatFuncNK& b) {
    if (a.is_zero() || b.is_zero()) return RatFuncNK();
    PolyNK g1 = gcd(a.num_, b.den_);
    PolyNK g2 = gcd(b.num_, a.den_);
    PolyNK num = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    PolyNK den = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    RatFuncNK r;
    Rat s = 1 / den.lc();
    r.num_ = num * s;
    r.den_ = den * s;
    return r;
}

RatFuncNK operator/(const RatFuncNK& a, const RatFuncNK& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    RatFuncNK inv;
    Rat s = 1 / b.num_.lc();
    inv.num_ = b.den_ * s;
    inv.den_ = b.num_ * s;
    return a * inv;
}

Rat RatFuncNK::eval(const Rat& n, const Rat& k) const {
    Rat d = den_.eval(n, k);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(n, k) / d;
}

std::string RatFuncNK::str() const {
    if (den_ == PolyNK(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncNK shift(const RatFuncNK& f, long dn, long dk) {
    // Shifts keep coprimality and only add lower-order terms, so the result
    // is still normalized.
    RatFuncNK r;
    r.num_ = shift(f.num_, dn, dk);
    r.den_ = shift(f.den_, dn, dk);
    return r;
}

bool cross_equal(const PolyNK& a, const PolyNK& b, const PolyNK& c, const PolyNK& d) {
    return a * d == c * b;
}

} // namespace odc
