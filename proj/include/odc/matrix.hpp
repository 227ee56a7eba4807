#ifndef ODC_MATRIX_HPP
#define ODC_MATRIX_HPP

#include "odc/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace odc {

/// Dense rows x cols matrix over Q, row-major.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    MatrixQ(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rat> operator*(const std::vector<Rat>& v) const;
    std::size_t nonzeros() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

} // namespace odc

#endif
