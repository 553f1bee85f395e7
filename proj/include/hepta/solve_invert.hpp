#ifndef HEPTA_SOLVE_INVERT_HPP_
#define HEPTA_SOLVE_INVERT_HPP_

#include <vector>

#include "hepta/factorization.hpp"
#include "hepta/hepta_matrix.hpp"

namespace hepta {

struct SolveReport {
    std::vector<Rational> solution;
    std::vector<std::size_t> substituted_pivots;
    bool residual_checked = false;
};

// Solves H x = rhs through the factorization. Components are carried in
// Q(t) and only evaluated at t = 0 at the end; with substituted pivots the
// intermediate values legitimately depend on t. Throws SingularMatrix when
// det H = 0 (a pole at t = 0 in a final component is reported the same way,
// naming the component).
SolveReport solve(const Factorization& f, const CyclicHeptaMatrix& h,
                  const std::vector<Rational>& rhs);

// Exact inverse via n unit-vector solves sharing one factorization.
DenseMatrix<Rational> invert(const CyclicHeptaMatrix& h);

// Inverse of the anti-cyclic matrix M = core * P: equals P * core^{-1},
// i.e. the core inverse with row order reversed.
DenseMatrix<Rational> anti_invert(const AntiCyclicHeptaMatrix& m);

// det M = det(core) * det(P) with det(P) = (-1)^(n/2 rounded down).
Rational anti_determinant(const AntiCyclicHeptaMatrix& m);

// Solves M x = rhs for the anti-cyclic matrix: the core solution reversed.
std::vector<Rational> anti_solve(const AntiCyclicHeptaMatrix& m, const std::vector<Rational>& rhs);

// Float-mode solve for the benchmark path.
std::vector<double> solve(const FloatFactorization& f, const std::vector<double>& rhs);

}  // namespace hepta

#endif  // HEPTA_SOLVE_INVERT_HPP_
