#pragma once

#include <cstdint>
#include <vector>

namespace tpcodec {

// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return d_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const {
        return d_[static_cast<std::size_t>(r) * cols_ + c];
    }

    T* row_ptr(int r) { return d_.data() + static_cast<std::size_t>(r) * cols_; }
    const T* row_ptr(int r) const { return d_.data() + static_cast<std::size_t>(r) * cols_; }

    std::vector<T>& data() { return d_; }
    const std::vector<T>& data() const { return d_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> d_;
};

using BitMatrix = Matrix<std::uint8_t>;
using RealMatrix = Matrix<double>;
using LlrMatrix = Matrix<double>;

} // namespace tpcodec
