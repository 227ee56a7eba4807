#ifndef ODC_LINALG_HPP
#define ODC_LINALG_HPP

#include "odc/matrix.hpp"
#include "odc/poly_n.hpp"
#include "odc/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace odc {

struct Pivot {
    std::size_t row;
    std::size_t col;
};

/// Row echelon form of an integer matrix computed by Bareiss fraction-free
/// elimination. Pivots are chosen among all remaining entries by smallest bit
/// size, ties going to the lowest column and then the lowest row, so the result
/// is reproducible.
class IntegerEchelon {
public:
    IntegerEchelon(std::vector<Integer> entries, std::size_t rows, std::size_t cols);
    /// Scales every row to integers first; row scaling does not change the kernel.
    static IntegerEchelon from_rational(const MatrixQ& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<Pivot>& pivots() const { return pivots_; }
    /// Non-pivot columns in increasing order; one kernel basis vector each.
    std::vector<std::size_t> free_columns() const;
    /// The kernel basis vector that is 1 at `free_col` and 0 at every other
    /// free column, scaled to integers with content 1.
    std::vector<Integer> kernel_vector(std::size_t free_col) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> a_;
    std::vector<Pivot> pivots_;
};

/// Some nonzero v with M v = 0 (integer entries, content 1, first nonzero
/// entry positive), or nullopt when the kernel is trivial.
std::optional<std::vector<Integer>> nullspace_vector(const MatrixQ& m);

/// Basis of the right kernel over Q(n) of a matrix with entries in Q[n]. Each
/// basis vector is cleared to polynomials whose gcd is 1 and whose coefficients
/// are integers with content 1.
std::vector<std::vector<PolyN>> nullspace_over_ratfunc(const std::vector<std::vector<PolyN>>& rows);

/// Scales a rational vector to integers with content 1 and first nonzero entry
/// positive. The zero vector maps to zeros.
std::vector<Integer> normalize_integer_vector(const std::vector<Rat>& v);

} // namespace odc

#endif
