#ifndef HEPTA_DETAIL_SYMBOLIC_SUM_HPP_
#define HEPTA_DETAIL_SYMBOLIC_SUM_HPP_

#include <cstddef>
#include <vector>

#include "hepta/ratfunc.hpp"

namespace hepta::detail {

// Dot products sum(a[j] * b[j], j = 1..last) over 1-based sequences.
//
// Over Q(t) the naive left fold is poison: the partial sums drag along the
// least common multiple of all term denominators, whose degree grows
// linearly, even though the full sum provably reduces to P(t)/minor(t) with
// deg P bounded by the substitution count. The exact-field overload
// therefore samples the sum at small integer points, interpolates P against
// the known minor denominator, and cross-checks the result at one extra
// point. Terms without t take a plain exact accumulation.
RatFunc dot_sum(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, std::size_t last,
                const RatFunc& denominator_minor, std::size_t degree_bound, std::size_t& ops);

inline double dot_sum(const std::vector<double>& a, const std::vector<double>& b,
                      std::size_t last, const double&, std::size_t, std::size_t& ops) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= last; ++j) acc += a[j] * b[j];
    ops += last;
    return acc;
}

inline Rational dot_sum(const std::vector<Rational>& a, const std::vector<Rational>& b,
                        std::size_t last, const Rational&, std::size_t, std::size_t& ops) {
    Rational acc(0);
    for (std::size_t j = 1; j <= last; ++j) {
        if (a[j].is_zero() || b[j].is_zero()) continue;
        acc += a[j] * b[j];
    }
    ops += last;
    return acc;
}

// Exact Lagrange interpolation through (xs[i], ys[i]).
Poly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace hepta::detail

#endif  // HEPTA_DETAIL_SYMBOLIC_SUM_HPP_
