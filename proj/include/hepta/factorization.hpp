#ifndef HEPTA_FACTORIZATION_HPP_
#define HEPTA_FACTORIZATION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "hepta/dense_matrix.hpp"
#include "hepta/detail/band_engine.hpp"
#include "hepta/float_scalar.hpp"
#include "hepta/hepta_matrix.hpp"
#include "hepta/ratfunc.hpp"

namespace hepta {

// Exact factorization over Q(t). An exactly-zero pivot is replaced by the
// symbol t and its index recorded in `substituted`; the factorization never
// fails in exact mode. When `substituted` is empty no stored value mentions t.
using Factorization = detail::FactorSeqs<RatFunc>;

// Float-mode factorization; a (near-)zero pivot raises PivotBreakdown
// instead, there is no symbolic rescue in doubles.
using FloatFactorization = detail::FactorSeqs<double>;

// Seven double bands, same layout and 1-based conventions as Bands.
struct FloatBands {
    std::size_t n = 0;
    std::vector<double> diag, super1, super2, super3, sub1, sub2, sub3;
};

FloatBands to_float_bands(const CyclicHeptaMatrix& h);

Factorization factor(const CyclicHeptaMatrix& h);
FloatFactorization factor(const FloatBands& h, const FloatOptions& opts = {});

namespace detail {

// Reference implementation running every recurrence termwise over Q(t).
// factor() computes the same object through numeric sampling and exact
// interpolation, which is orders of magnitude faster once a symbol is in
// play; tests assert both agree.
Factorization factor_symbolic(const CyclicHeptaMatrix& h);

// Evaluates every sequence at t = tau; empty result when a pivot or any
// stored denominator vanishes there.
std::optional<FactorSeqs<Rational>> evaluate_at(const Factorization& f, const Rational& tau);

}  // namespace detail

// det H = (product of pivots) evaluated at t = 0; exactly 0 iff H is singular.
Rational determinant(const Factorization& f);
Rational determinant(const CyclicHeptaMatrix& h);
double determinant(const FloatFactorization& f);

// eval at 0 of the running minor products, indices 0..n. Entry i equals the
// i-th leading principal minor of H for i <= n-2, and entry n equals det H.
std::vector<Rational> leading_minors(const Factorization& f);

// Materialized factors; lower has unit diagonal, upper holds the pivots.
// L*U equals the input matrix plus t on the diagonal at each perturbed index.
struct LUPair {
    DenseMatrix<RatFunc> lower;
    DenseMatrix<RatFunc> upper;
    std::vector<std::size_t> perturbation;
};

LUPair reconstruct_lu(const Factorization& f);

template <typename Field>
std::size_t op_count(const detail::FactorSeqs<Field>& f) {
    return f.mul_div_count;
}

}  // namespace hepta

#endif  // HEPTA_FACTORIZATION_HPP_
