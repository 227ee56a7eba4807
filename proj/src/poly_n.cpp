#include "odc/poly_n.hpp"

#include <optional>

#include <sstream>

namespace odc {

PolyN::PolyN(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

PolyN::PolyN(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyN::PolyN(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

PolyN PolyN::monomial(const Rat& c, int power) {
    if (c == 0) return {};
    std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return PolyN(std::move(v));
}

void PolyN::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree PolyN::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rat PolyN::coeff(int i) const {
    if (i < 0 || i >= length()) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& PolyN::lc() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

PolyN PolyN::operator-() const {
    PolyN r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyN& PolyN::operator+=(const PolyN& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyN(std::move(r));
}

PolyN& PolyN::operator*=(const PolyN& o) { return *this = *this * o; }

PolyN& PolyN::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyN PolyN::shift(const Rat& t) const {
    if (t == 0 || is_constant()) return *this;
    // Horner in (n + t).
    PolyN step(std::vector<Rat>{t, Rat(1)});
    PolyN r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= step;
        r += PolyN(*it);
    }
    return r;
}

Rat PolyN::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<PolyN, PolyN> PolyN::divmod(const PolyN& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (length() < d.length()) return {PolyN(), *this};
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quo(coeffs_.size() - d.coeffs_.size() + 1);
    const Rat inv = 1 / d.lc();
    const std::size_t dl = d.coeffs_.size();
    for (std::size_t top = rem.size(); top >= dl; --top) {
        const std::size_t i = top - 1;
        if (rem[i] == 0) continue;
        Rat f = rem[i] * inv;
        quo[top - dl] = f;
        for (std::size_t j = 0; j < dl; ++j) rem[top - dl + j] -= f * d.coeffs_[j];
    }
    return {PolyN(std::move(quo)), PolyN(std::move(rem))};
}

PolyN PolyN::exact_div(const PolyN& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

PolyN PolyN::monic() const {
    if (is_zero()) return {};
    return *this * (1 / lc());
}

Rat PolyN::content() const {
    if (is_zero()) return Rat(0);
    Integer g = 0, l = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rat(g, l);
}

PolyN PolyN::primitive() const {
    if (is_zero()) return {};
    return *this * (1 / content());
}

std::size_t PolyN::bit_size() const {
    std::size_t s = 0;
    for (const auto& c : coeffs_) s += odc::bit_size(c);
    return s;
}

std::string PolyN::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = length() - 1; i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << to_string(a);
            if (i > 0) os << "*";
        }
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

// Pseudo-remainder lc(b)^e a mod b for integer polynomials.
PolyN pseudo_rem(PolyN a, const PolyN& b) {
    const int db = b.length();
    const Rat& lb = b.lc();
    while (a.length() >= db) {
        const Rat la = a.lc();
        const int shift = a.length() - db;
        a *= lb;
        a -= PolyN::monomial(la, shift) * b;
    }
    return a;
}

Integer max_abs_coeff(const PolyN& p) {
    Integer m = 0;
    for (const auto& c : p.coeffs())
        if (abs(c.get_num()) > m) m = abs(c.get_num());
    return m;
}

Integer eval_integer(const PolyN& p, const Integer& x) {
    Integer v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) v = v * x + it->get_num();
    return v;
}

// Heuristic gcd of primitive integer polynomials: evaluate at a large integer,
// take the integer gcd and read the candidate back from its balanced digits.
// A candidate is only accepted when it divides both inputs.
std::optional<PolyN> gcd_heuristic(const PolyN& a, const PolyN& b) {
    Integer xi = 2 * std::min(max_abs_coeff(a), max_abs_coeff(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Integer g;
        const Integer va = eval_integer(a, xi), vb = eval_integer(b, xi);
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        const Integer half = xi / 2;
        std::vector<Rat> digits;
        while (g != 0) {
            Integer dgt;
            mpz_fdiv_r(dgt.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (dgt > half) dgt -= xi;
            digits.push_back(Rat(dgt));
            g = (g - dgt) / xi;
        }
        PolyN cand = PolyN(std::move(digits));
        if (!cand.is_zero()) {
            cand = cand.primitive();
            if (a.divmod(cand).second.is_zero() && b.divmod(cand).second.is_zero()) return cand;
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

} // namespace

// Heuristic gcd first, primitive remainder sequence over Z as the fallback.
PolyN gcd(const PolyN& a, const PolyN& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    PolyN x = a.primitive(), y = b.primitive();
    if (x.is_constant() || y.is_constant()) return PolyN(1);
    if (auto g = gcd_heuristic(x, y)) return g->monic();
    if (x.length() < y.length()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.is_constant()) return PolyN(1);
        PolyN r = pseudo_rem(std::move(x), y);
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic();
}

PolyN lcm(const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b.exact_div(gcd(a, b))).monic();
}

PolyN rising_factorial(const PolyN& p, int m) {
    if (m < 0) throw PreconditionError("rising factorial with negative length");
    PolyN r(1);
    for (int i = 0; i < m; ++i) r *= p + PolyN(Rat(i));
    return r;
}

} // namespace odc

namespace odc {

namespace {

Integer eval_monic(const std::vector<Integer>& g, const Integer& y) {
    Integer v = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) v = v * y + *it;
    return v;
}

Integer eval_derivative(const std::vector<Integer>& g, const Integer& y) {
    Integer v = 0;
    for (std::size_t i = g.size() - 1; i >= 1; --i) v = v * y + g[i] * static_cast<unsigned long>(i);
    return v;
}

} // namespace

// With L = lc(f) and D = deg f, g(y) = L^(D-1) f(y/L) is monic over Z, so a
// rational root of f is an integer root of g divided by L. Roots of g are found
// from above by Newton steps rounded towards the upper side: above the largest
// root of a real-rooted polynomial the iteration cannot cross that root.
std::optional<std::vector<Rat>> split_rational_roots(const PolyN& f) {
    if (f.is_zero()) return std::nullopt;
    std::vector<Rat> roots;
    if (f.is_constant()) return roots;
    const PolyN pf = f.primitive();
    const int D = pf.length() - 1;
    const Integer L = pf.lc().get_num();
    std::vector<Integer> g(static_cast<std::size_t>(D) + 1);
    Integer lpow = 1;
    for (int i = D - 1; i >= 0; --i) {
        g[static_cast<std::size_t>(i)] = pf.coeff(i).get_num() * lpow;
        lpow *= L;
    }
    g[static_cast<std::size_t>(D)] = 1;

    Integer bound = 0;
    for (int i = 0; i < D; ++i) bound = std::max(bound, Integer(abs(g[static_cast<std::size_t>(i)])));
    Integer y = bound + 1;
    long budget = 200000;
    while (g.size() > 1) {
        const Integer v = eval_monic(g, y);
        if (v == 0) {
            roots.push_back(make_rat(y, L));
            // synthetic division by (x - y)
            std::vector<Integer> q(g.size() - 1);
            Integer carry = 0;
            for (std::size_t i = g.size() - 1; i >= 1; --i) {
                carry = g[i] + carry * y;
                q[i - 1] = carry;
            }
            g = std::move(q);
            continue;
        }
        // Above every root a monic polynomial is positive; a negative value
        // means a real root was skipped, so f does not split over Q.
        if (v < 0 || --budget < 0 || y < -bound - 1) return std::nullopt;
        const Integer dv = eval_derivative(g, y);
        if (dv <= 0) return std::nullopt;
        Integer step;
        mpz_fdiv_q(step.get_mpz_t(), v.get_mpz_t(), dv.get_mpz_t());
        if (step == 0) step = 1;
        y -= step;
    }
    return roots;
}

} // namespace odc
