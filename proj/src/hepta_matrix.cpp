#include "hepta/hepta_matrix.hpp"

#include <string>

namespace hepta {

namespace {

void check_length(const char* name, const std::vector<Rational>& v, std::size_t n) {
    if (v.size() != n)
        throw LengthMismatch(std::string("band \"") + name + "\" has length " +
                             std::to_string(v.size()) + ", expected " + std::to_string(n));
}

void check_reserved(const char* name, const Rational& value, std::size_t index) {
    if (!value.is_zero())
        throw ReservedSlotNonzero(std::string("reserved slot ") + name + "[" +
                                  std::to_string(index) + "] must be zero, got " + value.str());
}

}  // namespace

CyclicHeptaMatrix CyclicHeptaMatrix::from_bands(std::size_t n, Bands bands) {
    if (n < 8) throw DimensionTooSmall("cyclic heptadiagonal matrices need n >= 8, got n = " +
                                       std::to_string(n));
    check_length("d", bands.diag, n);
    check_length("a", bands.super1, n);
    check_length("A", bands.super2, n);
    check_length("C", bands.super3, n);
    check_length("b", bands.sub1, n);
    check_length("B", bands.sub2, n);
    check_length("D", bands.sub3, n);
    for (std::size_t i = 1; i <= 3; ++i) check_reserved("D", bands.sub3[i - 1], i);
    for (std::size_t i = n - 2; i <= n; ++i) check_reserved("C", bands.super3[i - 1], i);
    return CyclicHeptaMatrix(n, std::move(bands));
}

DenseMatrix<Rational> CyclicHeptaMatrix::to_dense() const {
    DenseMatrix<Rational> m(n_, n_);
    for (std::size_t i = 1; i <= n_; ++i) {
        for_each_in_row(i, [&](std::size_t j, const Rational& v) { m(i - 1, j - 1) = v; });
    }
    return m;
}

std::vector<Rational> CyclicHeptaMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != n_)
        throw LengthMismatch("apply: vector of length " + std::to_string(x.size()) +
                             " against matrix of order " + std::to_string(n_));
    std::vector<Rational> y(n_, Rational(0));
    for (std::size_t i = 1; i <= n_; ++i) {
        Rational acc(0);
        for_each_in_row(i, [&](std::size_t j, const Rational& v) {
            if (!v.is_zero()) acc += v * x[j - 1];
        });
        y[i - 1] = acc;
    }
    return y;
}

CyclicHeptaMatrix CyclicHeptaMatrix::from_dense(const DenseMatrix<Rational>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("from_dense: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
    const std::size_t n = m.rows();
    if (n < 8) throw DimensionTooSmall("cyclic heptadiagonal matrices need n >= 8, got n = " +
                                       std::to_string(n));
    Bands b;
    b.diag.resize(n);
    b.super1.resize(n);
    b.super2.resize(n);
    b.super3.resize(n);
    b.sub1.resize(n);
    b.sub2.resize(n);
    b.sub3.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        b.diag[i - 1] = m(i - 1, i - 1);
        if (i + 1 <= n) b.super1[i - 1] = m(i - 1, i);
        if (i + 2 <= n) b.super2[i - 1] = m(i - 1, i + 1);
        if (i + 3 <= n) b.super3[i - 1] = m(i - 1, i + 2);
        if (i >= 2) b.sub1[i - 1] = m(i - 1, i - 2);
        if (i >= 3) b.sub2[i - 1] = m(i - 1, i - 3);
        if (i >= 4) b.sub3[i - 1] = m(i - 1, i - 4);
    }
    b.sub1[0] = m(0, n - 1);
    b.sub2[0] = m(0, n - 2);
    b.sub2[1] = m(1, n - 1);
    b.super2[n - 2] = m(n - 2, 0);
    b.super1[n - 1] = m(n - 1, 0);
    b.super2[n - 1] = m(n - 1, 1);

    CyclicHeptaMatrix h = from_bands(n, std::move(b));
    const DenseMatrix<Rational> rebuilt = h.to_dense();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != rebuilt(i, j))
                throw NotHeptaStructured("nonzero entry outside the band/corner pattern at (" +
                                         std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                         "): " + m(i, j).str());
        }
    }
    return h;
}

AntiCyclicHeptaMatrix AntiCyclicHeptaMatrix::from_dense(const DenseMatrix<Rational>& m) {
    return AntiCyclicHeptaMatrix(CyclicHeptaMatrix::from_dense(m.reversed_cols()));
}

}  // namespace hepta
