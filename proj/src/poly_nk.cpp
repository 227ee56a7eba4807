#include "odc/poly_nk.hpp"

#include <sstream>

namespace odc {

PolyNK::PolyNK(const Rat& c) {
    if (c != 0) terms_.emplace(Mono{0, 0}, c);
}

PolyNK::PolyNK(const PolyN& p) {
    for (int i = 0; i < p.length(); ++i)
        if (p.coeff(i) != 0) terms_.emplace(Mono{i, 0}, p.coeff(i));
}

PolyNK PolyNK::n() { return monomial(Rat(1), 1, 0); }
PolyNK PolyNK::k() { return monomial(Rat(1), 0, 1); }

PolyNK PolyNK::monomial(const Rat& c, int n_exp, int k_exp) {
    PolyNK p;
    if (c != 0) p.terms_.emplace(Mono{n_exp, k_exp}, c);
    return p;
}

PolyNK PolyNK::linear(const Rat& cn, const Rat& ck, const Rat& c0) {
    PolyNK p;
    p.add_term({1, 0}, cn);
    p.add_term({0, 1}, ck);
    p.add_term({0, 0}, c0);
    return p;
}

bool PolyNK::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Rat PolyNK::coeff(int n_exp, int k_exp) const {
    auto it = terms_.find(Mono{n_exp, k_exp});
    return it == terms_.end() ? Rat(0) : it->second;
}

Degree PolyNK::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.total();
}

Degree PolyNK::degree_n() const {
    Degree d;
    for (const auto& [m, c] : terms_) d = max_degree(d, m.n);
    return d;
}

Degree PolyNK::degree_k() const {
    Degree d;
    for (const auto& [m, c] : terms_) d = max_degree(d, m.k);
    return d;
}

Mono PolyNK::leading_mono() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& PolyNK::lc() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void PolyNK::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyNK PolyNK::operator-() const {
    PolyNK r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PolyNK& PolyNK::operator+=(const PolyNK& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyNK& PolyNK::operator-=(const PolyNK& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolyNK operator*(const PolyNK& a, const PolyNK& b) {
    PolyNK r;
    if (a.is_zero() || b.is_zero()) return r;
    Rat prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_term(Mono{ma.n + mb.n, ma.k + mb.k}, prod);
        }
    return r;
}

PolyNK& PolyNK::operator*=(const PolyNK& o) { return *this = *this * o; }

PolyNK& PolyNK::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

PolyNK PolyNK::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    PolyNK r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Rat PolyNK::eval(const Rat& n, const Rat& k) const {
    Rat r = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < m.n; ++i) t *= n;
        for (int i = 0; i < m.k; ++i) t *= k;
        r += t;
    }
    return r;
}

PolyNK PolyNK::substitute_k(const PolyNK& value) const {
    auto cs = coeffs_in_k();
    PolyNK r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        r *= value;
        r += PolyNK(*it);
    }
    return r;
}

std::vector<PolyN> PolyNK::coeffs_in_k() const {
    std::vector<std::vector<Rat>> dense;
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(dense.size()) <= m.k) dense.resize(static_cast<std::size_t>(m.k) + 1);
        auto& row = dense[static_cast<std::size_t>(m.k)];
        if (static_cast<int>(row.size()) <= m.n) row.resize(static_cast<std::size_t>(m.n) + 1);
        row[static_cast<std::size_t>(m.n)] = c;
    }
    std::vector<PolyN> out;
    out.reserve(dense.size());
    for (auto& row : dense) out.emplace_back(std::move(row));
    return out;
}

PolyNK PolyNK::from_coeffs_in_k(const std::vector<PolyN>& cs) {
    PolyNK r;
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (int i = 0; i < cs[j].length(); ++i)
            r.add_term(Mono{i, static_cast<int>(j)}, cs[j].coeff(i));
    return r;
}

bool PolyNK::is_k_free() const {
    for (const auto& [m, c] : terms_)
        if (m.k != 0) return false;
    return true;
}

PolyN PolyNK::as_poly_n() const {
    if (!is_k_free()) throw std::domain_error("polynomial involves k");
    auto cs = coeffs_in_k();
    return cs.empty() ? PolyN() : cs[0];
}

std::optional<PolyNK> PolyNK::try_div(const PolyNK& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Mono ld = d.leading_mono();
    const Rat inv = 1 / d.lc();
    PolyNK rem = *this, quo;
    while (!rem.is_zero()) {
        const Mono lm = rem.leading_mono();
        if (lm.n < ld.n || lm.k < ld.k) return std::nullopt;
        const Rat f = rem.lc() * inv;
        const int en = lm.n - ld.n, ek = lm.k - ld.k;
        quo.add_term(Mono{en, ek}, f);
        for (const auto& [m, c] : d.terms_) rem.add_term(Mono{m.n + en, m.k + ek}, -f * c);
    }
    return quo;
}

PolyNK PolyNK::exact_div(const PolyNK& d) const {
    auto q = try_div(d);
    if (!q) throw std::domain_error("inexact polynomial division");
    return std::move(*q);
}

Rat PolyNK::content() const {
    if (is_zero()) return Rat(0);
    Integer g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rat(g, l);
}

PolyNK PolyNK::primitive() const {
    if (is_zero()) return {};
    return *this * (1 / content());
}

std::string PolyNK::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (m.total() == 0 || a != 1) {
            os << to_string(a);
            wrote = true;
        }
        auto var = [&](char v, int e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            wrote = true;
        };
        var('n', m.n);
        var('k', m.k);
    }
    return os.str();
}

PolyNK rising_factorial(const PolyNK& p, int m) {
    if (m < 0) throw PreconditionError("rising factorial with negative length");
    PolyNK r(1);
    for (int i = 0; i < m; ++i) r *= p + PolyNK(Rat(i));
    return r;
}

namespace {

// Binomial expansion of (x + t)^e as coefficients of x^0..x^e.
std::vector<Rat> binomial_powers(const Rat& t, int e) {
    std::vector<Rat> out(static_cast<std::size_t>(e) + 1);
    Integer binom = 1;
    Rat tp = 1;
    for (int i = e; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = Rat(binom) * tp;
        binom = binom * i / (e - i + 1);
        tp *= t;
    }
    return out;
}

} // namespace

PolyNK shift(const PolyNK& p, const Rat& dn, const Rat& dk) {
    if (dn == 0 && dk == 0) return p;
    PolyNK r;
    std::map<int, std::vector<Rat>> n_cache, k_cache;
    auto powers = [](std::map<int, std::vector<Rat>>& cache, const Rat& t, int e) -> const std::vector<Rat>& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, binomial_powers(t, e)).first;
        return it->second;
    };
    for (const auto& [m, c] : p.terms()) {
        const auto& pn = powers(n_cache, dn, m.n);
        const auto& pk = powers(k_cache, dk, m.k);
        for (int i = 0; i <= m.n; ++i) {
            if (pn[static_cast<std::size_t>(i)] == 0) continue;
            Rat ci = c * pn[static_cast<std::size_t>(i)];
            for (int j = 0; j <= m.k; ++j) {
                if (pk[static_cast<std::size_t>(j)] == 0) continue;
                r.add_term(Mono{i, j}, ci * pk[static_cast<std::size_t>(j)]);
            }
        }
    }
    return r;
}

PolyNK shift(const PolyNK& p, long dn, long dk) { return shift(p, Rat(dn), Rat(dk)); }

namespace {

using KPoly = std::vector<PolyN>;

void trim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

PolyN content_n(const KPoly& a) {
    PolyN g;
    for (const auto& c : a) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Divides out the Q[n]-content and scales to integer coefficients with gcd 1.
KPoly primitive_k(KPoly a) {
    trim(a);
    if (a.empty()) return a;
    PolyN g = content_n(a);
    if (!g.is_constant())
        for (auto& c : a) c = c.exact_div(g);
    Integer num = 0, den = 1;
    for (const auto& c : a)
        for (const auto& x : c.coeffs()) {
            if (x == 0) continue;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
    Rat scale = make_rat(den, num);
    if (a.back().lc() < 0) scale = -scale;
    for (auto& c : a) c *= scale;
    return a;
}

// Pseudo-remainder of a by b in Q[n][k].
KPoly prem(KPoly a, const KPoly& b) {
    const PolyN& lb = b.back();
    const std::size_t db = b.size();
    while (a.size() >= db) {
        const std::size_t shift = a.size() - db;
        PolyN la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

PolyNK normalize_lc(const PolyNK& p) {
    if (p.is_zero()) return p;
    return p * (1 / p.lc());
}

} // namespace

PolyNK gcd(const PolyNK& a, const PolyNK& b) {
    if (a.is_zero()) return normalize_lc(b);
    if (b.is_zero()) return normalize_lc(a);
    if (a.is_constant() || b.is_constant()) return PolyNK(1);

    KPoly A = a.coeffs_in_k(), B = b.coeffs_in_k();
    const PolyN c = gcd(content_n(A), content_n(B));
    A = primitive_k(A);
    B = primitive_k(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        if (B.size() == 1) {
            A = KPoly{PolyN(1)};
            break;
        }
        KPoly R = primitive_k(prem(A, B));
        A = std::move(B);
        B = std::move(R);
    }
    A = primitive_k(A);
    for (auto& x : A) x *= c;
    return normalize_lc(PolyNK::from_coeffs_in_k(A));
}

} // namespace odc
