#include "hepta/detail/symbolic_sum.hpp"

#include <string>

namespace hepta::detail {

Poly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis(Rational(1));
        Rational denom(1);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k == i) continue;
            basis *= Poly(std::vector<Rational>{-xs[k], Rational(1)});
            denom *= xs[i] - xs[k];
        }
        acc += basis * Poly(ys[i] / denom);
    }
    return acc;
}

RatFunc dot_sum(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, std::size_t last,
                const RatFunc& denominator_minor, std::size_t degree_bound, std::size_t& ops) {
    bool symbolic = false;
    for (std::size_t j = 1; j <= last && !symbolic; ++j)
        symbolic = a[j].mentions_symbol() || b[j].mentions_symbol();

    if (!symbolic) {
        Rational acc(0);
        for (std::size_t j = 1; j <= last; ++j) {
            if (a[j].is_zero() || b[j].is_zero()) continue;
            acc += a[j].num().constant_term() * b[j].num().constant_term();
        }
        ops += last;
        return RatFunc(acc);
    }

    if (!denominator_minor.den().is_one())
        throw Error("internal: running minor is not a polynomial");
    const Poly& minor_poly = denominator_minor.num();

    const std::size_t points = degree_bound + 2;  // one extra point cross-checks the fit
    std::vector<Rational> xs, ps;
    xs.reserve(points);
    ps.reserve(points);
    for (long tau = 1; xs.size() < points; ++tau) {
        if (tau > 4096) throw Error("internal: no usable sample points for symbolic sum");
        const Rational x(tau);
        const Rational minor_at_x = minor_poly.eval(x);
        if (minor_at_x.is_zero()) continue;
        Rational sum(0);
        bool usable = true;
        for (std::size_t j = 1; j <= last; ++j) {
            if (a[j].is_zero() || b[j].is_zero()) continue;
            const Rational da = a[j].den().eval(x);
            const Rational db = b[j].den().eval(x);
            if (da.is_zero() || db.is_zero()) {
                usable = false;
                break;
            }
            sum += (a[j].num().eval(x) * b[j].num().eval(x)) / (da * db);
            ++ops;
        }
        if (!usable) continue;
        xs.push_back(x);
        ps.push_back(sum * minor_at_x);
    }

    const std::vector<Rational> xs_fit(xs.begin(), xs.end() - 1);
    const std::vector<Rational> ps_fit(ps.begin(), ps.end() - 1);
    const Poly p = lagrange_interpolate(xs_fit, ps_fit);
    if (p.eval(xs.back()) != ps.back())
        throw Error("internal: symbolic dot product reconstruction mismatch");
    return RatFunc(p, minor_poly);
}

}  // namespace hepta::detail
