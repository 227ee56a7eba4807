#include "odc/telescope.hpp"
#include "odc/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace odc {

namespace {

PolyNK times_n_power(const PolyNK& p, int e) {
    if (e == 0) return p;
    PolyNK out;
    for (const auto& [m, c] : p.terms()) out.add_term(Mono{m.n + e, m.k}, c);
    return out;
}

PolyNK poly_of(const PolyN& p) { return PolyNK(p); }

int positive_part(int x) { return x > 0 ? x : 0; }

void check_splittable(const ProperTerm& h, bool allow) {
    if (!allow && detect_splittable(h))
        throw PreconditionError("term splits into a rational function times a k-free term; "
                                "use the rational pipeline or override");
}

} // namespace

GosperTriple gosper_triple(const ProperTerm& h, int r) {
    if (r < 0) throw PreconditionError("order must be nonnegative");
    GosperTriple g;
    g.r = r;
    for (int i = 0; i <= r; ++i) {
        PolyNK part = shift(h.p, i, 0);
        Rat xi = 1;
        for (int t = 0; t < i; ++t) xi *= h.x;
        part *= xi;
        for (const auto& f : h.factors) {
            const PolyNK arg = f.argument();
            if (in_numerator(f.family))
                part *= rising_factorial(arg, i * f.cn);
            else
                part *= rising_factorial(shift(arg, i, 0), (r - i) * f.cn);
        }
        g.parts.push_back(std::move(part));
    }
    g.Q = PolyNK(h.y);
    g.R = PolyNK(1);
    for (const auto& f : h.factors) {
        const PolyNK arg = f.argument();
        switch (f.family) {
        case Family::A: g.Q *= rising_factorial(arg, f.ck); break;
        case Family::V: g.Q *= rising_factorial(shift(arg, r, 0) - PolyNK(Rat(f.ck)), f.ck); break;
        case Family::U: g.R *= rising_factorial(shift(arg, r, 0) - PolyNK(Rat(f.ck)), f.ck); break;
        case Family::B: g.R *= rising_factorial(arg, f.ck); break;
        }
    }
    return g;
}

DegreePlan degree_plan(const StructuralParams& sp, int r, int d) {
    const int amu = sp.abs_mu();
    if (r < sp.nu) throw PreconditionError("order below nu");
    if (d < amu * sp.nu) throw PreconditionError("degree below |mu| nu");
    DegreePlan plan;
    plan.r = r;
    plan.d = d;
    for (int i = 0; i <= r; ++i) {
        const int cut = sp.mu >= 0 ? positive_part(sp.nu + i - r) : positive_part(sp.nu - i);
        plan.di.push_back(d - cut * amu);
    }
    plan.s1 = sp.delta + sp.theta * r - sp.nu;
    plan.s2 = sp.delta + sp.theta * r + d - sp.nu * amu - sp.nu;
    return plan;
}

DegreePlan uniform_plan(const StructuralParams& sp, int r, int d, int slack) {
    if (r < 0 || d < 0) throw PreconditionError("order and degree must be nonnegative");
    DegreePlan plan;
    plan.r = r;
    plan.d = d;
    plan.di.assign(static_cast<std::size_t>(r + 1), d);
    const int base = sp.delta + sp.theta * r;
    if (r >= sp.nu) {
        plan.s1 = base - sp.nu;
        plan.s2 = base + d - sp.nu;
    } else {
        const int drop = sp.lambda * (sp.nu - r);
        const int at_nu = sp.delta + sp.theta * sp.nu - sp.nu;
        plan.s1 = std::min(base, at_nu - drop);
        plan.s2 = std::min(base + d, at_nu + d - drop);
    }
    plan.s1 += slack;
    plan.s2 += slack;
    return plan;
}

LinearSystem assemble_system(const ProperTerm& h, const DegreePlan& plan) {
    return assemble_system(h, gosper_triple(h, plan.r), plan);
}

LinearSystem assemble_system(const ProperTerm&, const GosperTriple& g, const DegreePlan& plan) {
    if (static_cast<int>(g.parts.size()) != plan.r + 1 || static_cast<int>(plan.di.size()) != plan.r + 1)
        throw std::invalid_argument("plan and triple disagree on the order");
    LinearSystem sys;
    std::vector<PolyNK> cols;
    for (int i = 0; i <= plan.r; ++i)
        for (int j = 0; j <= plan.di[static_cast<std::size_t>(i)]; ++j) {
            sys.columns.push_back({ColumnLabel::Ell, i, j});
            cols.push_back(times_n_power(g.parts[static_cast<std::size_t>(i)], j));
        }
    sys.ell_count = cols.size();

    const int imax = std::min(plan.s1, plan.s2);
    const PolyNK k = PolyNK::k();
    const PolyNK k1 = k + PolyNK(1);
    PolyNK kpow(1), k1pow(1);
    for (int i = 0; i <= imax; ++i) {
        const PolyNK base = g.R * kpow - g.Q * k1pow;
        for (int j = 0; j <= plan.s2 - i; ++j) {
            sys.columns.push_back({ColumnLabel::Y, i, j});
            cols.push_back(times_n_power(base, j));
        }
        kpow *= k;
        k1pow *= k1;
    }

    std::map<Mono, std::size_t, GrlexLess> row_of;
    for (const auto& c : cols)
        for (const auto& [m, v] : c.terms()) row_of.emplace(m, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : row_of) {
        i = idx++;
        sys.rows.push_back(m);
    }
    sys.matrix = MatrixQ(sys.rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [m, v] : cols[j].terms()) sys.matrix(row_of.at(m), j) = v;
    return sys;
}

RatFuncNK certificate_from(const ProperTerm& h, const GosperTriple& g, const PolyNK& Y) {
    PolyNK num = g.R * Y;
    if (num.is_zero()) return RatFuncNK();
    // The denominator is p times linear factors; cancel the linear ones by
    // trial division and leave only p to a general gcd.
    PolyNK den(1);
    for (const auto& f : h.factors) {
        if (in_numerator(f.family)) continue;
        const PolyNK arg = f.argument();
        for (int t = 0; t < g.r * f.cn; ++t) {
            const PolyNK lin = arg + PolyNK(Rat(t));
            if (auto q = num.try_div(lin))
                num = std::move(*q);
            else
                den *= lin;
        }
    }
    PolyNK p = h.p;
    if (!p.is_constant()) {
        const PolyNK common = gcd(num, p);
        if (!common.is_constant()) {
            num = num.exact_div(common);
            p = p.exact_div(common);
        }
    }
    return RatFuncNK::from_coprime(std::move(num), den * p);
}

SolveOutcome solve_structured(const ProperTerm& h, int r, int d, const SolveOptions& opt) {
    h.validate();
    check_splittable(h, opt.allow_splittable);
    if (r < 0 || d < 0) throw PreconditionError("order and degree must be nonnegative");
    const StructuralParams sp = structural_params(h);
    DegreePlan plan;
    if (!opt.force_uniform && r >= sp.nu && d >= sp.abs_mu() * sp.nu)
        plan = degree_plan(sp, r, d);
    else
        plan = uniform_plan(sp, r, d, opt.slack);

    const GosperTriple g = gosper_triple(h, r);
    const LinearSystem sys = assemble_system(h, g, plan);
    SolveOutcome out;
    out.rows = sys.matrix.rows();
    out.cols = sys.matrix.cols();
    const IntegerEchelon ech = IntegerEchelon::from_rational(sys.matrix);
    out.rank = ech.rank();
    const auto free = ech.free_columns();
    for (std::size_t f : free) {
        const std::vector<Integer> v = ech.kernel_vector(f);
        bool ell_nonzero = false;
        for (std::size_t j = 0; j < sys.ell_count && !ell_nonzero; ++j) ell_nonzero = v[j] != 0;
        if (!ell_nonzero) continue;

        std::vector<std::vector<Rat>> lc(static_cast<std::size_t>(r + 1));
        PolyNK Y;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const ColumnLabel& c = sys.columns[j];
            if (c.kind == ColumnLabel::Ell) {
                auto& coeffs = lc[static_cast<std::size_t>(c.i)];
                if (static_cast<int>(coeffs.size()) <= c.j) coeffs.resize(static_cast<std::size_t>(c.j + 1));
                coeffs[static_cast<std::size_t>(c.j)] = Rat(v[j]);
            } else {
                Y.add_term(Mono{c.j, c.i}, Rat(v[j]));
            }
        }
        TelescoperPair pair;
        for (auto& c : lc) pair.L.coeffs.push_back(PolyN(std::move(c)));
        const Rat content = pair.L.normalize();
        Y *= 1 / content;
        pair.C.value = certificate_from(h, g, Y);
        if (!verify_pair(h, pair.L, pair.C.value))
            throw std::logic_error("structured solution failed verification");
        out.pair = std::move(pair);
        return out;
    }
    if (!free.empty()) {
        out.y_only_kernel = true;
        out.note = "kernel contains only solutions with L = 0";
    }
    return out;
}

std::optional<ZeilbergerResult> solve_zeilberger(const ProperTerm& h, int rmax, const ZeilbergerOptions& opt) {
    h.validate();
    check_splittable(h, opt.allow_splittable);
    const StructuralParams sp = structural_params(h);
    for (int r = 0; r <= rmax; ++r) {
        const GosperTriple g = gosper_triple(h, r);
        const int s = uniform_plan(sp, r, 0, opt.slack).s1;
        std::vector<std::vector<PolyN>> cols;
        for (const auto& part : g.parts) cols.push_back(part.coeffs_in_k());
        const PolyNK k = PolyNK::k();
        const PolyNK k1 = k + PolyNK(1);
        PolyNK kpow(1), k1pow(1);
        for (int j = 0; j <= s; ++j) {
            cols.push_back((g.R * kpow - g.Q * k1pow).coeffs_in_k());
            kpow *= k;
            k1pow *= k1;
        }
        std::size_t nrows = 0;
        for (const auto& c : cols) nrows = std::max(nrows, c.size());
        if (nrows == 0) nrows = 1;
        std::vector<std::vector<PolyN>> rows(nrows, std::vector<PolyN>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];

        for (auto& v : nullspace_over_ratfunc(rows)) {
            bool ell_nonzero = false;
            for (int i = 0; i <= r && !ell_nonzero; ++i) ell_nonzero = !v[static_cast<std::size_t>(i)].is_zero();
            if (!ell_nonzero) continue;
            ZeilbergerResult res;
            res.order = r;
            res.pair.L.coeffs.assign(v.begin(), v.begin() + r + 1);
            std::vector<PolyN> ycoeffs(v.begin() + r + 1, v.end());
            PolyNK Y = PolyNK::from_coeffs_in_k(ycoeffs);
            const Rat content = res.pair.L.normalize();
            Y *= 1 / content;
            res.pair.C.value = certificate_from(h, g, Y);
            if (!verify_pair(h, res.pair.L, res.pair.C.value))
                throw std::logic_error("Q(n) solution failed verification");
            return res;
        }
    }
    return std::nullopt;
}

bool verify_pair(const ProperTerm& h, const Telescoper& L, const RatFuncNK& C) {
    if (L.coeffs.empty() || L.is_zero()) return false;
    const RatFuncNK sn = sigma_n(h);
    const RatFuncNK sk = sigma_k(h);
    const int r = L.order();
    // Horner: acc_i = l_i + sigma_n(n+i) acc_{i+1}, kept as an unreduced fraction.
    PolyNK accN = poly_of(L.coeffs[static_cast<std::size_t>(r)]);
    PolyNK accD(1);
    for (int i = r - 1; i >= 0; --i) {
        const PolyNK a = shift(sn.num(), i, 0);
        const PolyNK b = shift(sn.den(), i, 0);
        accN = poly_of(L.coeffs[static_cast<std::size_t>(i)]) * b * accD + a * accN;
        accD = b * accD;
    }
    // shift(C,0,1) sigma_k - C
    const PolyNK c1 = shift(C.num(), 0, 1);
    const PolyNK e1 = shift(C.den(), 0, 1);
    const PolyNK rhsN = c1 * sk.num() * C.den() - C.num() * e1 * sk.den();
    const PolyNK rhsD = e1 * sk.den() * C.den();
    return cross_equal(accN, accD, rhsN, rhsD);
}

unsigned default_workers() {
    if (const char* env = std::getenv("ODC_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

Region region_scan(const ProperTerm& h, int rmax, int dmax, const RegionOptions& opt) {
    h.validate();
    check_splittable(h, opt.allow_splittable);
    if (rmax < 0 || dmax < 0) throw PreconditionError("window must be nonnegative");
    Region region;
    region.rmax = rmax;
    region.dmax = dmax;
    region.cells.resize(static_cast<std::size_t>((rmax + 1) * (dmax + 1)));
    const unsigned workers = opt.workers ? opt.workers : default_workers();
    SolveOptions sopt;
    sopt.allow_splittable = true;
    sopt.force_uniform = true;
    sopt.slack = opt.slack;

    for (int r = 0; r <= rmax; ++r) {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (int d = next++; d <= dmax; d = next++) {
              try {
                RegionCell& cell = region.cells[static_cast<std::size_t>(r * (dmax + 1) + d)];
                cell.r = r;
                cell.d = d;
                SolveOutcome o = solve_structured(h, r, d, sopt);
                if (o.pair) {
                    cell.exists = true;
                    cell.verified = true; // solve_structured verifies before returning
                    if (opt.keep_pairs) cell.pair = std::move(o.pair);
                }
              } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
              }
            }
        };
        const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(dmax + 1));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
        if (opt.progress) {
            int marked = 0;
            for (int d = 0; d <= dmax; ++d) marked += region.marked(r, d);
            opt.progress(r, marked);
        }
    }
    return region;
}

} // namespace odc
