#ifndef ODC_TELESCOPE_HPP
#define ODC_TELESCOPE_HPP

#include "odc/hyperterm.hpp"
#include "odc/matrix.hpp"
#include "odc/telescoper.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace odc {

/// P = sum_i l_i * parts[i], Q and R of the Gosper equation P = Q S_k(Y) - R Y.
struct GosperTriple {
    int r = 0;
    std::vector<PolyNK> parts;
    PolyNK Q;
    PolyNK R;
};

GosperTriple gosper_triple(const ProperTerm& h, int r);

/// Per-coefficient n-degree caps d_i and the Y caps (s1 on the k-degree, s2 on
/// the total degree). A negative cap means Y = 0.
struct DegreePlan {
    int r = 0;
    int d = 0;
    std::vector<int> di;
    int s1 = 0;
    int s2 = 0;
};

/// Trapezoidal plan. Requires r >= nu and d >= |mu| nu; throws PreconditionError otherwise.
DegreePlan degree_plan(const StructuralParams& sp, int r, int d);

/// Plan with every d_i = d and Y caps raised by `slack`. For r >= nu the caps are
/// delta + theta r - nu and delta + theta r + d - nu. Below nu they are continued
/// downwards from r = nu with slope lambda, which keeps the solvable set closed
/// under r -> r + 1 (padding L with a zero top coefficient multiplies Y by a
/// product of lambda linear factors).
DegreePlan uniform_plan(const StructuralParams& sp, int r, int d, int slack);

struct ColumnLabel {
    enum Kind { Ell, Y } kind;
    int i;
    int j;
    friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// Coefficient comparison of P - Q S_k(Y) + R Y. Ell columns: l_{i,j} is the
/// coefficient of n^j in l_i. Y columns: y_{i,j} multiplies k^i n^j.
struct LinearSystem {
    MatrixQ matrix;
    std::vector<ColumnLabel> columns;
    std::vector<Mono> rows;
    std::size_t ell_count = 0;
};

LinearSystem assemble_system(const ProperTerm& h, const DegreePlan& plan);
LinearSystem assemble_system(const ProperTerm& h, const GosperTriple& g, const DegreePlan& plan);

struct SolveOptions {
    bool allow_splittable = false;
    /// Extra Y degree for the uniform plan (used when the trapezoidal plan's
    /// preconditions fail, and by solve_zeilberger).
    int slack = 0;
    /// Always use the uniform plan.
    bool force_uniform = false;
};

struct SolveOutcome {
    std::optional<TelescoperPair> pair;
    /// The kernel was nonzero but every kernel vector had l = 0.
    bool y_only_kernel = false;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::string note;
};

/// C = R Y / (p prod rf(U, r u) prod rf(V, r v)), the certificate relative to h.
RatFuncNK certificate_from(const ProperTerm& h, const GosperTriple& g, const PolyNK& Y);

SolveOutcome solve_structured(const ProperTerm& h, int r, int d, const SolveOptions& opt = {});

struct ZeilbergerOptions {
    bool allow_splittable = false;
    int slack = 2;
};

struct ZeilbergerResult {
    TelescoperPair pair;
    int order = 0;
};

std::optional<ZeilbergerResult> solve_zeilberger(const ProperTerm& h, int rmax,
                                                 const ZeilbergerOptions& opt = {});

bool verify_pair(const ProperTerm& h, const Telescoper& L, const RatFuncNK& C);

struct RegionCell {
    int r = 0;
    int d = 0;
    bool exists = false;
    bool verified = false;
    std::optional<TelescoperPair> pair;
};

struct Region {
    int rmax = 0;
    int dmax = 0;
    std::vector<RegionCell> cells; ///< row-major in r, then d

    const RegionCell& at(int r, int d) const { return cells[static_cast<std::size_t>(r * (dmax + 1) + d)]; }
    bool marked(int r, int d) const { return at(r, d).exists; }
};

struct RegionOptions {
    int slack = 2;
    /// 0 picks ODC_WORKERS from the environment, else the hardware concurrency.
    unsigned workers = 0;
    bool allow_splittable = false;
    bool keep_pairs = true;
    /// Called after each completed r-row.
    std::function<void(int r, int marked)> progress;
};

Region region_scan(const ProperTerm& h, int rmax, int dmax, const RegionOptions& opt = {});

unsigned default_workers();

} // namespace odc

#endif
