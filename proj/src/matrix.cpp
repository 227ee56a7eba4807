#include "odc/matrix.hpp"

#include <stdexcept>

namespace odc {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : row) data_.emplace_back(x);
    }
}

std::vector<Rat> MatrixQ::operator*(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = (*this)(i, j);
            if (a != 0 && v[j] != 0) out[i] += a * v[j];
        }
    return out;
}

std::size_t MatrixQ::nonzeros() const {
    std::size_t c = 0;
    for (const auto& x : data_) c += (x != 0);
    return c;
}

} // namespace odc
