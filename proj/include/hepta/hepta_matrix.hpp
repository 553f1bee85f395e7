#ifndef HEPTA_HEPTA_MATRIX_HPP_
#define HEPTA_HEPTA_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "hepta/dense_matrix.hpp"
#include "hepta/rational.hpp"

namespace hepta {

// The seven coefficient families of a cyclic heptadiagonal matrix, in the
// band-file order d, a, A, C, b, B, D. Each vector has length n and is
// addressed 1-based through CyclicHeptaMatrix.
//
// Corner entries recycle the out-of-range band slots: sub1[1] is the
// top-right corner H[1,n], sub2[1] = H[1,n-1], sub2[2] = H[2,n],
// super2[n-1] = H[n-1,1], super1[n] = H[n,1], super2[n] = H[n,2].
// Reserved slots sub3[1..3] and super3[n-2..n] must be zero.
struct Bands {
    std::vector<Rational> diag;    // d: main diagonal
    std::vector<Rational> super1;  // a: first superdiagonal (+ corner a_n)
    std::vector<Rational> super2;  // A: second superdiagonal (+ corners A_{n-1}, A_n)
    std::vector<Rational> super3;  // C: third superdiagonal
    std::vector<Rational> sub1;    // b: first subdiagonal (+ corner b_1)
    std::vector<Rational> sub2;    // B: second subdiagonal (+ corners B_1, B_2)
    std::vector<Rational> sub3;    // D: third subdiagonal
};

// Immutable cyclic heptadiagonal matrix of order n >= 8.
class CyclicHeptaMatrix {
public:
    // Validates dimension, family lengths and reserved slots.
    static CyclicHeptaMatrix from_bands(std::size_t n, Bands bands);

    // Extracts bands from a dense matrix; every position outside the band
    // and corner pattern must be exactly zero.
    static CyclicHeptaMatrix from_dense(const DenseMatrix<Rational>& m);

    std::size_t size() const { return n_; }
    const Bands& bands() const { return bands_; }

    // 1-based accessors matching the placement convention above.
    const Rational& diag(std::size_t i) const { return bands_.diag[i - 1]; }
    const Rational& super1(std::size_t i) const { return bands_.super1[i - 1]; }
    const Rational& super2(std::size_t i) const { return bands_.super2[i - 1]; }
    const Rational& super3(std::size_t i) const { return bands_.super3[i - 1]; }
    const Rational& sub1(std::size_t i) const { return bands_.sub1[i - 1]; }
    const Rational& sub2(std::size_t i) const { return bands_.sub2[i - 1]; }
    const Rational& sub3(std::size_t i) const { return bands_.sub3[i - 1]; }

    DenseMatrix<Rational> to_dense() const;

    // Exact matrix-vector product touching only the O(n) stored entries.
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    // Visits the nonzero-pattern slots of row i (1-based) as fn(col, value).
    template <typename Fn>
    void for_each_in_row(std::size_t i, Fn&& fn) const {
        const std::size_t n = n_;
        if (i >= 4) fn(i - 3, sub3(i));
        if (i >= 3) fn(i - 2, sub2(i));
        if (i >= 2) fn(i - 1, sub1(i));
        fn(i, diag(i));
        if (i + 1 <= n) fn(i + 1, super1(i));
        if (i + 2 <= n) fn(i + 2, super2(i));
        if (i + 3 <= n) fn(i + 3, super3(i));
        if (i == 1) {
            fn(n - 1, sub2(1));
            fn(n, sub1(1));
        } else if (i == 2) {
            fn(n, sub2(2));
        } else if (i == n - 1) {
            fn(std::size_t{1}, super2(n - 1));
        } else if (i == n) {
            fn(std::size_t{1}, super1(n));
            fn(std::size_t{2}, super2(n));
        }
    }

private:
    CyclicHeptaMatrix(std::size_t n, Bands bands) : n_(n), bands_(std::move(bands)) {}
    std::size_t n_;
    Bands bands_;
};

// Anti-cyclic heptadiagonal matrix M, stored through its cyclic core H
// with M = H * P (M is H with column order reversed).
class AntiCyclicHeptaMatrix {
public:
    explicit AntiCyclicHeptaMatrix(CyclicHeptaMatrix core) : core_(std::move(core)) {}

    // Reverses columns first, then validates as cyclic.
    static AntiCyclicHeptaMatrix from_dense(const DenseMatrix<Rational>& m);

    const CyclicHeptaMatrix& core() const { return core_; }
    std::size_t size() const { return core_.size(); }

    DenseMatrix<Rational> to_dense() const { return core_.to_dense().reversed_cols(); }

private:
    CyclicHeptaMatrix core_;
};

}  // namespace hepta

#endif  // HEPTA_HEPTA_MATRIX_HPP_
