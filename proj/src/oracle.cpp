#include "hepta/oracle.hpp"

#include <string>
#include <utility>

namespace hepta {
namespace oracle {

namespace {

void require_square(const DenseMatrix<Rational>& m, const char* who) {
    if (m.rows() != m.cols())
        throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", expected square");
}

}  // namespace

Rational det(const DenseMatrix<Rational>& m) {
    require_square(m, "oracle::det");
    const std::size_t n = m.rows();
    DenseMatrix<Rational> a = m;
    bool negate = false;
    Rational result(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot_row = c;
        while (pivot_row < n && a(pivot_row, c).is_zero()) ++pivot_row;
        if (pivot_row == n) return Rational(0);
        if (pivot_row != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot_row, j));
            negate = !negate;
        }
        result *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const Rational factor = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
        }
    }
    return negate ? -result : result;
}

namespace {

// Gauss-Jordan on [m | rhs_block]; throws SingularMatrix when a pivot
// column is exhausted.
DenseMatrix<Rational> jordan(const DenseMatrix<Rational>& m, DenseMatrix<Rational> rhs) {
    const std::size_t n = m.rows();
    DenseMatrix<Rational> a = m;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot_row = c;
        while (pivot_row < n && a(pivot_row, c).is_zero()) ++pivot_row;
        if (pivot_row == n) throw SingularMatrix("singular at column " + std::to_string(c + 1));
        if (pivot_row != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot_row, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(c, j), rhs(pivot_row, j));
        }
        const Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) a(c, j) /= pivot;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const Rational factor = a(r, c);
            for (std::size_t j = 0; j < n; ++j) a(r, j) -= factor * a(c, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= factor * rhs(c, j);
        }
    }
    return rhs;
}

}  // namespace

std::vector<Rational> solve(const DenseMatrix<Rational>& m, const std::vector<Rational>& rhs) {
    require_square(m, "oracle::solve");
    if (rhs.size() != m.rows())
        throw LengthMismatch("oracle::solve: rhs length " + std::to_string(rhs.size()) +
                             " vs order " + std::to_string(m.rows()));
    DenseMatrix<Rational> col(m.rows(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) col(i, 0) = rhs[i];
    DenseMatrix<Rational> x = jordan(m, std::move(col));
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x(i, 0);
    return out;
}

DenseMatrix<Rational> invert(const DenseMatrix<Rational>& m) {
    require_square(m, "oracle::invert");
    return jordan(m, DenseMatrix<Rational>::identity(m.rows()));
}

}  // namespace oracle

DenseMatrix<Rational> ExchangeMatrix::to_dense() const {
    DenseMatrix<Rational> p(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) p(i, n_ - 1 - i) = Rational(1);
    return p;
}

DenseMatrix<Rational> exchange_apply(const ExchangeMatrix& p, const DenseMatrix<Rational>& m,
                                     Side side) {
    if (side == Side::left) {
        if (m.rows() != p.size())
            throw DimensionMismatch("exchange_apply left: P order " + std::to_string(p.size()) +
                                    " vs " + std::to_string(m.rows()) + " rows");
        return m.reversed_rows();
    }
    if (m.cols() != p.size())
        throw DimensionMismatch("exchange_apply right: P order " + std::to_string(p.size()) +
                                " vs " + std::to_string(m.cols()) + " columns");
    return m.reversed_cols();
}

}  // namespace hepta
