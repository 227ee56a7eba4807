#include "odc/linalg.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace odc {

namespace {

using SizeKey = std::pair<std::size_t, std::size_t>;

struct IntegerOps {
    static bool zero(const Integer& x) { return x == 0; }
    static SizeKey size(const Integer& x) { return {bit_size(x), 0}; }
    // x = (p*x - f*y) / prev
    static void update(Integer& x, const Integer& p, const Integer& f, const Integer& y,
                       const Integer& prev, Integer& tmp) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), y.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
    // x = p*x / prev
    static void scale(Integer& x, const Integer& p, const Integer& prev, Integer& tmp) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
};

struct PolyOps {
    static bool zero(const PolyN& x) { return x.is_zero(); }
    static SizeKey size(const PolyN& x) { return {static_cast<std::size_t>(x.length()), x.bit_size()}; }
    static void update(PolyN& x, const PolyN& p, const PolyN& f, const PolyN& y, const PolyN& prev,
                       PolyN&) {
        PolyN t = p * x;
        if (!f.is_zero() && !y.is_zero()) t -= f * y;
        x = prev == PolyN(1) ? std::move(t) : t.exact_div(prev);
    }
    static void scale(PolyN& x, const PolyN& p, const PolyN& prev, PolyN&) {
        PolyN t = p * x;
        x = prev == PolyN(1) ? std::move(t) : t.exact_div(prev);
    }
};

// Bareiss elimination with full pivoting on the smallest entry. With
// reduce_above the already pivoted rows are updated too (fraction-free
// Gauss-Jordan); afterwards every pivot entry equals the last pivot.
template <class T, class Ops>
std::vector<Pivot> bareiss(std::vector<T>& a, std::size_t rows, std::size_t cols, bool reduce_above) {
    std::vector<Pivot> pivots;
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    std::vector<std::size_t> active_rows(rows), active_cols(cols);
    for (std::size_t i = 0; i < rows; ++i) active_rows[i] = i;
    for (std::size_t j = 0; j < cols; ++j) active_cols[j] = j;
    T prev(1);
    T tmp;
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };

    while (!active_rows.empty() && !active_cols.empty()) {
        // Pivot search: columns ascending, rows ascending, strict improvement only.
        bool found = false;
        Pivot best{0, 0};
        SizeKey best_size{std::numeric_limits<std::size_t>::max(), 0};
        for (std::size_t j : active_cols)
            for (std::size_t i : active_rows) {
                const T& x = at(i, j);
                if (Ops::zero(x)) continue;
                SizeKey s = Ops::size(x);
                if (!found || s < best_size) {
                    found = true;
                    best = {i, j};
                    best_size = s;
                }
            }
        if (!found) break;

        const std::size_t pr = best.row, pc = best.col;
        row_done[pr] = 1;
        col_done[pc] = 1;
        std::erase(active_rows, pr);
        std::erase(active_cols, pc);
        const T p = at(pr, pc);

        auto eliminate_row = [&](std::size_t i, bool include_done_cols) {
            const T f = at(i, pc);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == pc) continue;
                if (col_done[j] && !include_done_cols) continue;
                T& x = at(i, j);
                const T& y = at(pr, j);
                if (Ops::zero(f)) {
                    if (!Ops::zero(x)) Ops::scale(x, p, prev, tmp);
                } else if (!Ops::zero(x) || !Ops::zero(y)) {
                    Ops::update(x, p, f, y, prev, tmp);
                }
            }
            at(i, pc) = T(0);
        };

        for (std::size_t i : active_rows) eliminate_row(i, false);
        if (reduce_above)
            for (const auto& pv : pivots) eliminate_row(pv.row, true);

        pivots.push_back(best);
        prev = p;
    }
    return pivots;
}

} // namespace

IntegerEchelon::IntegerEchelon(std::vector<Integer> entries, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    pivots_ = bareiss<Integer, IntegerOps>(a_, rows_, cols_, false);
}

IntegerEchelon IntegerEchelon::from_rational(const MatrixQ& m) {
    std::vector<Integer> entries(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m(i, j);
            entries[i * m.cols() + j] = q.get_num() * (l / q.get_den());
        }
    }
    return IntegerEchelon(std::move(entries), m.rows(), m.cols());
}

std::vector<std::size_t> IntegerEchelon::free_columns() const {
    std::vector<char> is_pivot(cols_, 0);
    for (const auto& p : pivots_) is_pivot[p.col] = 1;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

std::vector<Integer> IntegerEchelon::kernel_vector(std::size_t free_col) const {
    std::vector<Rat> x(cols_);
    x[free_col] = 1;
    // Row of pivot t is zero in the columns of earlier pivots, so solve from the
    // last pivot backwards.
    for (std::size_t t = pivots_.size(); t-- > 0;) {
        const auto [row, col] = pivots_[t];
        const Integer* r = &a_[row * cols_];
        Rat s = Rat(r[free_col]);
        for (std::size_t u = t + 1; u < pivots_.size(); ++u) {
            const std::size_t c = pivots_[u].col;
            if (r[c] != 0 && x[c] != 0) s += Rat(r[c]) * x[c];
        }
        x[col] = -s / Rat(r[col]);
    }
    return normalize_integer_vector(x);
}

std::vector<Integer> normalize_integer_vector(const std::vector<Rat>& v) {
    Integer l = 1, g = 0;
    for (const auto& q : v) {
        if (q == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    std::vector<Integer> out(v.size());
    if (g == 0) return out;
    int sign = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        if (sign == 0) sign = v[j] > 0 ? 1 : -1;
        out[j] = v[j].get_num() * (l / v[j].get_den()) / g * sign;
    }
    return out;
}

std::optional<std::vector<Integer>> nullspace_vector(const MatrixQ& m) {
    if (m.cols() == 0) return std::nullopt;
    IntegerEchelon e = IntegerEchelon::from_rational(m);
    auto free = e.free_columns();
    if (free.empty()) return std::nullopt;
    return e.kernel_vector(free.front());
}

std::vector<std::vector<PolyN>> nullspace_over_ratfunc(const std::vector<std::vector<PolyN>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::vector<PolyN> a;
    a.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged polynomial matrix");
        a.insert(a.end(), r.begin(), r.end());
    }
    auto pivots = bareiss<PolyN, PolyOps>(a, rows.size(), cols, true);

    std::vector<char> is_pivot(cols, 0);
    for (const auto& p : pivots) is_pivot[p.col] = 1;
    // After Gauss-Jordan every pivot entry equals the last pivot D, so the basis
    // vector for free column f is D at f and -a[row_t][f] at each pivot column.
    const PolyN d = pivots.empty() ? PolyN(1) : a[pivots.back().row * cols + pivots.back().col];

    std::vector<std::vector<PolyN>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<PolyN> v(cols);
        v[f] = d;
        for (const auto& p : pivots) v[p.col] = -a[p.row * cols + f];
        PolyN g;
        for (const auto& x : v) g = gcd(g, x);
        Integer num = 0, den = 1;
        for (auto& x : v) {
            if (x.is_zero()) continue;
            x = x.exact_div(g);
            for (const auto& c : x.coeffs()) {
                if (c == 0) continue;
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            }
        }
        Rat s = make_rat(den, num);
        for (const auto& x : v)
            if (!x.is_zero()) {
                if (x.lc() < 0) s = -s;
                break;
            }
        for (auto& x : v) x *= s;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace odc
