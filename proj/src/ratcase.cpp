#include "odc/ratcase.hpp"
#include "odc/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace odc {

namespace {

template <class T>
void trim_zeros(std::vector<T>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Rational scale making a list of polynomials integral with content 1 and a
// positive leading coefficient in the last nonzero entry.
Rat integer_content(const std::vector<PolyN>& ps) {
    Integer num = 0, den = 1;
    for (const auto& p : ps)
        for (const auto& x : p.coeffs()) {
            if (x == 0) continue;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
    if (num == 0) return Rat(1);
    Rat c = make_rat(num, den);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it)
        if (!it->is_zero()) {
            if (it->lc() < 0) c = -c;
            break;
        }
    return c;
}

} // namespace

RecOperator::RecOperator(std::vector<PolyN> c) : coeffs(std::move(c)) { trim_zeros(coeffs); }

Degree RecOperator::degree() const {
    Degree d;
    for (const auto& c : coeffs) d = max_degree(d, c.degree());
    return d;
}

RecOperator RecOperator::normalized() const {
    RecOperator out = *this;
    const Rat inv = 1 / integer_content(coeffs);
    for (auto& c : out.coeffs) c *= inv;
    return out;
}

std::string RecOperator::str() const {
    Telescoper t{coeffs};
    return t.str();
}

RatOperator::RatOperator(std::vector<RatFuncN> c) : coeffs(std::move(c)) { trim_zeros(coeffs); }

RatOperator::RatOperator(const RecOperator& op) {
    for (const auto& c : op.coeffs) coeffs.emplace_back(c);
    trim_zeros(coeffs);
}

RatOperator::RatOperator(const Telescoper& L) {
    for (const auto& c : L.coeffs) coeffs.emplace_back(c);
    trim_zeros(coeffs);
}

RatOperator operator*(const RatOperator& a, const RatOperator& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatFuncN> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out[i + j] += a.coeffs[i] * b.coeffs[j].shift(Rat(static_cast<long>(i)));
        }
    }
    return RatOperator(std::move(out));
}

RatOperator operator+(const RatOperator& a, const RatOperator& b) {
    std::vector<RatFuncN> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    return RatOperator(std::move(out));
}

RatOperator operator-(const RatOperator& a, const RatOperator& b) {
    std::vector<RatFuncN> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
    return RatOperator(std::move(out));
}

RatOperator right_remainder(const RatOperator& A, const RatOperator& B) {
    if (B.is_zero()) throw PreconditionError("right division by the zero operator");
    std::vector<RatFuncN> r = A.coeffs;
    const int ob = B.order();
    const RatFuncN& lb = B.coeffs.back();
    trim_zeros(r);
    while (static_cast<int>(r.size()) - 1 >= ob) {
        const int t = static_cast<int>(r.size()) - 1 - ob;
        // subtract c S^t B with c lc(B)(n+t) = lc(r)
        const RatFuncN c = r.back() / lb.shift(Rat(t));
        for (int j = 0; j <= ob; ++j) {
            const RatFuncN& bj = B.coeffs[static_cast<std::size_t>(j)];
            if (bj.is_zero()) continue;
            r[static_cast<std::size_t>(t + j)] -= c * bj.shift(Rat(t));
        }
        r.back() = RatFuncN();
        trim_zeros(r);
    }
    return RatOperator(std::move(r));
}

void RationalSummand::validate() const {
    if (ap <= 0) throw PreconditionError("k-coefficient of a summand must be positive");
    if (e <= 0) throw PreconditionError("summand exponent must be positive");
    if (std::gcd(a, ap) != 1) throw PreconditionError("gcd(a, a') must be 1");
}

void DecomposedInput::validate() const {
    if (u.is_zero()) throw PreconditionError("u must be nonzero");
    for (const auto& part : parts) part.f.validate();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const auto& fi = parts[i].f;
            const auto& fj = parts[j].f;
            if (fi.e != fj.e) continue;
            const Rat dn = make_rat(fi.a, fi.ap) - make_rat(fj.a, fj.ap);
            const Rat dc = fi.app / fi.ap - fj.app / fj.ap;
            if (dn == 0 && is_integer(dc))
                throw PreconditionError("summands " + std::to_string(i) + " and " + std::to_string(j) +
                                        " differ by an integer k-shift");
        }
}

int DecomposedInput::sum_ap() const {
    int s = 0;
    for (const auto& p : parts) s += p.f.ap;
    return s;
}

RatFuncNK apply_operator(const RecOperator& V, const RationalSummand& f) {
    RatFuncNK out;
    const PolyNK lin = f.linear();
    for (std::size_t t = 0; t < V.coeffs.size(); ++t) {
        if (V.coeffs[t].is_zero()) continue;
        const PolyNK den = shift(lin, static_cast<long>(t), 0).pow(f.e);
        out += RatFuncNK(PolyNK(V.coeffs[t]), den);
    }
    return out;
}

RatFuncNK recompose(const DecomposedInput& inp) {
    RatFuncNK sum;
    for (const auto& part : inp.parts) sum += apply_operator(part.V, part.f);
    return sum * RatFuncNK(PolyNK(1), PolyNK(inp.u));
}

namespace {

struct LinearFactor {
    int a;
    int ap;
    Rat app;
    int mult;
};

// Coefficients of n^0, n^1, ... as polynomials in k.
std::vector<PolyN> coeffs_in_n(const PolyNK& p) {
    std::vector<std::vector<Rat>> cs;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(cs.size()) <= m.n) cs.resize(static_cast<std::size_t>(m.n + 1));
        auto& row = cs[static_cast<std::size_t>(m.n)];
        if (static_cast<int>(row.size()) <= m.k) row.resize(static_cast<std::size_t>(m.k + 1));
        row[static_cast<std::size_t>(m.k)] = c;
    }
    std::vector<PolyN> out;
    for (auto& row : cs) out.emplace_back(std::move(row));
    return out;
}

PolyN content_of(const std::vector<PolyN>& cs) {
    PolyN g;
    for (const auto& c : cs) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Factors a k-primitive q into lambda prod (a n + ap k + app)^mult.
std::vector<LinearFactor> linear_factors(const PolyNK& q) {
    const int D = q.degree().value_or(0);
    // top homogeneous part at n = 1, as a polynomial in k
    std::vector<Rat> top(static_cast<std::size_t>(D) + 1);
    for (const auto& [m, c] : q.terms())
        if (m.total() == D) top[static_cast<std::size_t>(m.k)] = c;
    const PolyN h1(std::move(top));
    if (h1.degree().value_or(0) != D)
        throw DecomposeError(DecomposeError::NonIntegerLinear, "denominator has a factor without k");
    auto slopes = split_rational_roots(h1);
    if (!slopes) throw DecomposeError(DecomposeError::NonIntegerLinear, "denominator is not a product of integer-linear factors");
    slopes->erase(std::unique(slopes->begin(), slopes->end()), slopes->end());

    std::vector<LinearFactor> out;
    for (const Rat& alpha : *slopes) {
        // k = -a/ap at n = 1
        const Integer ap = alpha.get_den();
        const Integer a = -alpha.get_num();
        if (!ap.fits_sint_p() || !a.fits_sint_p())
            throw DecomposeError(DecomposeError::NonIntegerLinear, "coefficient out of range");
        // After k = t + alpha n the factors of this direction no longer involve n.
        const PolyNK sub = q.substitute_k(PolyNK::k() + PolyNK::n() * alpha);
        const PolyN cont = content_of(coeffs_in_n(sub));
        auto roots = split_rational_roots(cont);
        if (!roots) throw DecomposeError(DecomposeError::NonIntegerLinear, "denominator is not a product of integer-linear factors");
        for (std::size_t i = 0; i < roots->size();) {
            std::size_t j = i;
            while (j < roots->size() && (*roots)[j] == (*roots)[i]) ++j;
            out.push_back({static_cast<int>(a.get_si()), static_cast<int>(ap.get_si()),
                           -(*roots)[i] * Rat(ap), static_cast<int>(j - i)});
            i = j;
        }
    }
    PolyNK prod(1);
    for (const auto& f : out) prod *= PolyNK::linear(Rat(f.a), Rat(f.ap), f.app).pow(f.mult);
    if (prod.degree() != q.degree() || prod * q.lc() != q * prod.lc())
        throw DecomposeError(DecomposeError::NonIntegerLinear, "denominator is not a product of integer-linear factors");
    std::sort(out.begin(), out.end(), [](const LinearFactor& x, const LinearFactor& y) {
        if (x.ap != y.ap) return x.ap < y.ap;
        if (x.a != y.a) return x.a < y.a;
        return x.app < y.app;
    });
    return out;
}

// Series coefficients g_0..g_{m-1} of num/den in s = k - root(n).
std::vector<RatFuncN> series_at(const PolyNK& num, const PolyNK& den, const PolyNK& root, int m) {
    const PolyNK s_plus_root = PolyNK::k() + root;
    const auto P = num.substitute_k(s_plus_root).coeffs_in_k();
    const auto W = den.substitute_k(s_plus_root).coeffs_in_k();
    if (W.empty() || W[0].is_zero()) throw std::logic_error("expansion point is a pole");
    std::vector<RatFuncN> g;
    for (int i = 0; i < m; ++i) {
        RatFuncN acc = static_cast<std::size_t>(i) < P.size() ? RatFuncN(P[static_cast<std::size_t>(i)]) : RatFuncN();
        for (int j = 1; j <= i && static_cast<std::size_t>(j) < W.size(); ++j)
            acc -= RatFuncN(W[static_cast<std::size_t>(j)]) * g[static_cast<std::size_t>(i - j)];
        g.push_back(acc * RatFuncN(PolyN(1), W[0]));
    }
    return g;
}

} // namespace

DecomposedInput decompose(const PolyNK& p, const PolyNK& q) {
    if (q.is_zero()) throw PreconditionError("zero denominator");
    if (p.is_zero()) return DecomposedInput{};
    if (p.degree_k().value_or(0) >= q.degree_k().value_or(0))
        throw DecomposeError(DecomposeError::Improper, "numerator degree in k must be below the denominator's");

    // k-free content of q goes to u
    const auto qk = q.coeffs_in_k();
    PolyN c = content_of(qk);
    PolyNK qt = q;
    if (!c.is_constant()) qt = q.exact_div(PolyNK(c));
    else c = PolyN(1);
    const Rat lambda = qt.lc();
    qt = qt * (1 / lambda);
    const RatFuncN scale = RatFuncN(PolyN(1), c * lambda);

    const auto factors = linear_factors(qt);

    // k-shift equivalence is only tolerated inside one n-shift class
    auto same_class = [](const LinearFactor& x, const LinearFactor& y) {
        if (x.a != y.a || x.ap != y.ap) return false;
        if (x.a == 0) return x.app == y.app;
        return is_integer((x.app - y.app) / x.a);
    };
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            const auto& x = factors[i];
            const auto& y = factors[j];
            if (x.a == y.a && x.ap == y.ap && !same_class(x, y) && is_integer((x.app - y.app) / x.ap))
                throw DecomposeError(DecomposeError::NotAbramovReduced,
                                     "denominator factors differ by a shift in k; reduce the input first");
        }

    // partial fraction coefficients c_{i,e}
    struct Piece {
        std::size_t factor;
        int e;
        RatFuncN coeff;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const PolyNK lin = PolyNK::linear(Rat(f.a), Rat(f.ap), f.app);
        const PolyNK W = qt.exact_div(lin.pow(f.mult));
        const PolyNK root = PolyNK::linear(Rat(-f.a) / f.ap, Rat(0), -f.app / f.ap);
        const auto g = series_at(p, W, root, f.mult);
        for (int e = 1; e <= f.mult; ++e) {
            Rat apow = 1;
            for (int t = 0; t < f.mult - e; ++t) apow *= f.ap;
            RatFuncN coeff = g[static_cast<std::size_t>(f.mult - e)] * RatFuncN(1 / apow) * scale;
            if (!coeff.is_zero()) pieces.push_back({i, e, std::move(coeff)});
        }
    }

    // group into classes; representative is the member with the smallest shift
    std::vector<int> cls(factors.size(), -1);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(reps.size());
        std::size_t rep = i;
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (cls[j] < 0 && same_class(factors[i], factors[j])) {
                cls[j] = cls[i];
                if (factors[j].a != 0 && (factors[j].app - factors[rep].app) / factors[rep].a < 0) rep = j;
            }
        reps.push_back(rep);
    }

    std::map<std::pair<int, int>, std::vector<RatFuncN>> grouped; // (class, e) -> coefficients by shift
    for (const auto& pc : pieces) {
        const int k = cls[pc.factor];
        const auto& rep = factors[reps[static_cast<std::size_t>(k)]];
        const auto& f = factors[pc.factor];
        const long t = rep.a == 0 ? 0 : floor_rat((f.app - rep.app) / rep.a).get_si();
        auto& v = grouped[{k, pc.e}];
        if (static_cast<long>(v.size()) <= t) v.resize(static_cast<std::size_t>(t + 1));
        v[static_cast<std::size_t>(t)] += pc.coeff;
    }

    DecomposedInput out;
    PolyN u(1);
    for (const auto& [key, v] : grouped)
        for (const auto& c : v)
            if (!c.is_zero()) u = lcm(u, c.den());
    out.u = u.monic();
    for (const auto& [key, v] : grouped) {
        const auto& rep = factors[reps[static_cast<std::size_t>(key.first)]];
        std::vector<PolyN> cs;
        for (const auto& c : v) cs.push_back((c * RatFuncN(out.u)).num());
        RecOperator V(std::move(cs));
        if (V.is_zero()) continue;
        out.parts.push_back({std::move(V), RationalSummand{rep.a, rep.ap, rep.app, key.second}});
    }
    out.validate();
    return out;
}

DecomposedInput decompose(const RatFuncNK& h) { return decompose(h.num(), h.den()); }

AnsatzCounts rational_ansatz_counts(const DecomposedInput& inp, int r, int d) {
    const long dt = d - inp.deg_u();
    AnsatzCounts c;
    c.columns = (r + 1) * (dt + 1);
    for (const auto& part : inp.parts) {
        const long rho = part.V.order();
        const long delta = part.V.degree().value_or(0);
        c.columns += (r + rho - part.f.ap + 1) * (dt + delta + 1);
        c.rows += (r + rho + 1) * (dt + delta + 1);
    }
    return c;
}

std::optional<Telescoper> solve_rational(const DecomposedInput& inp, int r, int d) {
    inp.validate();
    if (r < inp.sum_ap()) throw PreconditionError("order below the sum of the k-coefficients");
    if (d < inp.deg_u()) throw PreconditionError("degree below deg u");
    const int dt = d - inp.deg_u();

    // Rows: for each part, residue class of the S_n power modulo ap, and power of n.
    std::vector<std::size_t> offset;
    std::vector<int> width;
    std::size_t rows = 0;
    for (const auto& part : inp.parts) {
        offset.push_back(rows);
        const int w = dt + part.V.degree().value_or(0) + 1;
        width.push_back(w);
        rows += static_cast<std::size_t>(part.f.ap * w);
    }
    const std::size_t cols = static_cast<std::size_t>((r + 1) * (dt + 1));
    MatrixQ m(rows, cols);
    for (std::size_t pi = 0; pi < inp.parts.size(); ++pi) {
        const auto& part = inp.parts[pi];
        const int ap = part.f.ap;
        for (int i = 0; i <= r; ++i)
            for (std::size_t t = 0; t < part.V.coeffs.size(); ++t) {
                const PolyN vs = part.V.coeffs[t].shift(Rat(i));
                const int res = (i + static_cast<int>(t)) % ap;
                for (int j = 0; j <= dt; ++j) {
                    const std::size_t col = static_cast<std::size_t>(i * (dt + 1) + j);
                    for (int x = 0; x < vs.length(); ++x) {
                        if (vs.coeff(x) == 0) continue;
                        const std::size_t row = offset[pi] + static_cast<std::size_t>(res * width[pi] + x + j);
                        m(row, col) += vs.coeff(x);
                    }
                }
            }
    }
    auto v = nullspace_vector(m);
    if (!v) return std::nullopt;
    Telescoper L;
    for (int i = 0; i <= r; ++i) {
        std::vector<Rat> cs(static_cast<std::size_t>(dt + 1));
        for (int j = 0; j <= dt; ++j) cs[static_cast<std::size_t>(j)] = Rat((*v)[static_cast<std::size_t>(i * (dt + 1) + j)]);
        // L = L~ u: the coefficient of S^i picks up u(n+i)
        L.coeffs.push_back(PolyN(std::move(cs)) * inp.u.shift(Rat(i)));
    }
    L.normalize();
    if (!verify_rational(inp, L)) throw std::logic_error("rational telescoper failed verification");
    return L;
}

bool verify_rational(const DecomposedInput& inp, const Telescoper& L) {
    if (L.is_zero()) return false;
    const RatOperator Lu = RatOperator(L) * RatOperator(std::vector<RatFuncN>{RatFuncN(PolyN(1), inp.u)});
    for (const auto& part : inp.parts) {
        std::vector<RatFuncN> div(static_cast<std::size_t>(part.f.ap) + 1);
        div.front() = RatFuncN(-1);
        div.back() = RatFuncN(1);
        const RatOperator rem = right_remainder(Lu * RatOperator(part.V), RatOperator(std::move(div)));
        if (!rem.is_zero()) return false;
    }
    return true;
}

Telescoper lift(const Telescoper& L, const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) throw PreconditionError("cofactor quotient must be nonzero");
    const int r = L.order();
    Telescoper out;
    for (int i = 0; i <= r; ++i) {
        PolyN c = L.coeffs[static_cast<std::size_t>(i)];
        for (int t = 0; t < i; ++t) c *= b.shift(Rat(t));
        for (int t = i; t < r; ++t) c *= a.shift(Rat(t));
        out.coeffs.push_back(std::move(c));
    }
    out.normalize();
    return out;
}

} // namespace odc
