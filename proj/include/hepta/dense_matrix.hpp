#ifndef HEPTA_DENSE_MATRIX_HPP_
#define HEPTA_DENSE_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "hepta/errors.hpp"

namespace hepta {

// Row-major rectangular matrix over an exact or floating scalar.
// Indices are 0-based; error messages elsewhere report 1-based positions.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product: " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " times " + std::to_string(o.rows_) +
                                    "x" + std::to_string(o.cols_));
        DenseMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    r(i, j) += a * o(k, j);
                }
            }
        }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& x) const {
        if (cols_ != x.size())
            throw DimensionMismatch("matrix-vector product: " + std::to_string(cols_) +
                                    " columns vs vector of " + std::to_string(x.size()));
        std::vector<T> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc{};
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    DenseMatrix reversed_rows() const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(rows_ - 1 - i, j);
        return r;
    }

    DenseMatrix reversed_cols() const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, cols_ - 1 - j);
        return r;
    }

    template <typename U, typename Fn>
    DenseMatrix<U> map(Fn&& fn) const {
        DenseMatrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace hepta

#endif  // HEPTA_DENSE_MATRIX_HPP_
