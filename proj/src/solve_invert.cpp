#include "hepta/solve_invert.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hepta {

namespace {

// Shared machinery for substituted factorizations: the solution components
// x_i(t) have denominator det H(t) (Cramer), so x_i(0) is recovered from
// plain rational solves at |substituted|+1 sample points by Lagrange
// evaluation at 0 against the known determinant polynomial.
class SampledSolver {
public:
    SampledSolver(const Factorization& f, const Rational& det_at_zero) : n_(f.n) {
        const std::size_t points = f.substituted.size() + 1;
        std::vector<Rational> taus;
        long next_tau = 1;
        while (samples_.size() < points) {
            if (next_tau > 100000)
                throw Error("internal: sample budget exhausted in solve");
            const Rational tau(next_tau++);
            auto sample = detail::evaluate_at(f, tau);
            if (!sample) continue;
            samples_.push_back(std::move(*sample));
            taus.push_back(tau);
        }
        weights_.resize(points);
        for (std::size_t m = 0; m < points; ++m) {
            Rational lambda(1);
            for (std::size_t k = 0; k < points; ++k) {
                if (k == m) continue;
                lambda *= (-taus[k]) / (taus[m] - taus[k]);
            }
            weights_[m] = lambda * samples_[m].minors[n_] / det_at_zero;
        }
    }

    std::vector<Rational> solve(const std::vector<Rational>& rhs) const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t m = 0; m < samples_.size(); ++m) {
            const std::vector<Rational> xm = detail::solve_bands(samples_[m], rhs);
            for (std::size_t i = 0; i < n_; ++i) x[i] += weights_[m] * xm[i];
        }
        return x;
    }

private:
    std::size_t n_;
    std::vector<detail::FactorSeqs<Rational>> samples_;
    std::vector<Rational> weights_;
};

detail::FactorSeqs<Rational> factorization_at_zero(const Factorization& f) {
    auto at_zero = detail::evaluate_at(f, Rational(0));
    if (!at_zero) throw Error("internal: factorization not evaluable at t = 0");
    return std::move(*at_zero);
}

}  // namespace

SolveReport solve(const Factorization& f, const CyclicHeptaMatrix& h,
                  const std::vector<Rational>& rhs) {
    const std::size_t n = h.size();
    if (f.n != n)
        throw DimensionMismatch("solve: factorization of order " + std::to_string(f.n) +
                                " vs matrix of order " + std::to_string(n));
    if (rhs.size() != n)
        throw LengthMismatch("solve: rhs length " + std::to_string(rhs.size()) + " vs order " +
                             std::to_string(n));
    const Rational det = determinant(f);
    if (det.is_zero()) throw SingularMatrix();

    SolveReport report;
    report.substituted_pivots = f.substituted;
    if (f.substituted.empty()) {
        report.solution = detail::solve_bands(factorization_at_zero(f), rhs);
    } else {
        report.solution = SampledSolver(f, det).solve(rhs);
    }
    if (h.apply(report.solution) != rhs)
        throw Error("internal: solve residual mismatch");
    report.residual_checked = true;
    return report;
}

DenseMatrix<Rational> invert(const CyclicHeptaMatrix& h) {
    const std::size_t n = h.size();
    const Factorization f = factor(h);
    const Rational det = determinant(f);
    if (det.is_zero()) throw SingularMatrix();

    DenseMatrix<Rational> inv(n, n);
    std::vector<Rational> unit(n, Rational(0));
    if (f.substituted.empty()) {
        const detail::FactorSeqs<Rational> at_zero = factorization_at_zero(f);
        for (std::size_t col = 0; col < n; ++col) {
            unit[col] = Rational(1);
            const std::vector<Rational> x = detail::solve_bands(at_zero, unit);
            for (std::size_t row = 0; row < n; ++row) inv(row, col) = x[row];
            unit[col] = Rational(0);
        }
        return inv;
    }

    const SampledSolver solver(f, det);
    for (std::size_t col = 0; col < n; ++col) {
        unit[col] = Rational(1);
        const std::vector<Rational> x = solver.solve(unit);
        for (std::size_t row = 0; row < n; ++row) inv(row, col) = x[row];
        unit[col] = Rational(0);
    }
    if (h.to_dense() * inv != DenseMatrix<Rational>::identity(n))
        throw Error("internal: inverse identity check failed");
    return inv;
}

DenseMatrix<Rational> anti_invert(const AntiCyclicHeptaMatrix& m) {
    return invert(m.core()).reversed_rows();
}

Rational anti_determinant(const AntiCyclicHeptaMatrix& m) {
    const Rational core_det = determinant(m.core());
    return ((m.size() / 2) % 2 == 0) ? core_det : -core_det;
}

std::vector<Rational> anti_solve(const AntiCyclicHeptaMatrix& m,
                                 const std::vector<Rational>& rhs) {
    const Factorization f = factor(m.core());
    std::vector<Rational> x = solve(f, m.core(), rhs).solution;
    std::reverse(x.begin(), x.end());
    return x;
}

std::vector<double> solve(const FloatFactorization& f, const std::vector<double>& rhs) {
    if (rhs.size() != f.n)
        throw LengthMismatch("float solve: rhs length " + std::to_string(rhs.size()) +
                             " vs order " + std::to_string(f.n));
    return detail::solve_bands(f, rhs);
}

}  // namespace hepta
