#ifndef HEPTA_ORACLE_HPP_
#define HEPTA_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "hepta/dense_matrix.hpp"
#include "hepta/rational.hpp"

namespace hepta {

// Independent ground truth: plain rational Gaussian elimination with
// first-nonzero row pivoting. Deliberately shares no machinery with the
// banded factorization it is used to verify. Accepts any n >= 1.
namespace oracle {

Rational det(const DenseMatrix<Rational>& m);
std::vector<Rational> solve(const DenseMatrix<Rational>& m, const std::vector<Rational>& rhs);
DenseMatrix<Rational> invert(const DenseMatrix<Rational>& m);

}  // namespace oracle

// The exchange (reversal) permutation P: ones on the anti-diagonal.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(std::size_t n) : n_(n) {}
    std::size_t size() const { return n_; }
    DenseMatrix<Rational> to_dense() const;

private:
    std::size_t n_;
};

enum class Side { left, right };

// left: P*M (rows reversed); right: M*P (columns reversed).
DenseMatrix<Rational> exchange_apply(const ExchangeMatrix& p, const DenseMatrix<Rational>& m,
                                     Side side);

}  // namespace hepta

#endif  // HEPTA_ORACLE_HPP_
