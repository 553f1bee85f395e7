#include "hepta/factorization.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hepta/detail/symbolic_sum.hpp"

namespace hepta {

namespace {

struct ExactBandsView {
    const CyclicHeptaMatrix& m;
    std::size_t n() const { return m.size(); }
    RatFunc diag(std::size_t i) const { return RatFunc(m.diag(i)); }
    RatFunc super1(std::size_t i) const { return RatFunc(m.super1(i)); }
    RatFunc super2(std::size_t i) const { return RatFunc(m.super2(i)); }
    RatFunc super3(std::size_t i) const { return RatFunc(m.super3(i)); }
    RatFunc sub1(std::size_t i) const { return RatFunc(m.sub1(i)); }
    RatFunc sub2(std::size_t i) const { return RatFunc(m.sub2(i)); }
    RatFunc sub3(std::size_t i) const { return RatFunc(m.sub3(i)); }
};

struct ExactPivotPolicy {
    RatFunc resolve(std::size_t i, RatFunc value, const RatFunc&,
                    std::vector<std::size_t>& substituted) const {
        if (value.is_zero()) {
            substituted.push_back(i);
            return RatFunc::symbol();
        }
        return value;
    }
};

struct FloatBandsView {
    const FloatBands& b;
    std::size_t n() const { return b.n; }
    double diag(std::size_t i) const { return b.diag[i - 1]; }
    double super1(std::size_t i) const { return b.super1[i - 1]; }
    double super2(std::size_t i) const { return b.super2[i - 1]; }
    double super3(std::size_t i) const { return b.super3[i - 1]; }
    double sub1(std::size_t i) const { return b.sub1[i - 1]; }
    double sub2(std::size_t i) const { return b.sub2[i - 1]; }
    double sub3(std::size_t i) const { return b.sub3[i - 1]; }
};

struct FloatPivotPolicy {
    FloatOptions opts;
    double resolve(std::size_t i, double value, double diag_value,
                   std::vector<std::size_t>&) const {
        if (float_is_zero(value, diag_value, opts))
            throw PivotBreakdown(i, "pivot breakdown at index " + std::to_string(i) +
                                        " (value " + std::to_string(value) + ")");
        return value;
    }
};

// Rational view of the bands with t |-> tau substituted on the perturbed
// diagonal slots. Factoring this numerically evaluates the whole symbolic
// factorization at t = tau.
struct SampledBandsView {
    const CyclicHeptaMatrix& m;
    const std::vector<std::size_t>& perturbed;  // sorted pivot indices
    const Rational& tau;
    std::size_t n() const { return m.size(); }
    Rational diag(std::size_t i) const {
        Rational v = m.diag(i);
        if (std::binary_search(perturbed.begin(), perturbed.end(), i)) v += tau;
        return v;
    }
    Rational super1(std::size_t i) const { return m.super1(i); }
    Rational super2(std::size_t i) const { return m.super2(i); }
    Rational super3(std::size_t i) const { return m.super3(i); }
    Rational sub1(std::size_t i) const { return m.sub1(i); }
    Rational sub2(std::size_t i) const { return m.sub2(i); }
    Rational sub3(std::size_t i) const { return m.sub3(i); }
};

struct AbortOnZeroPivotPolicy {
    Rational resolve(std::size_t i, Rational value, const Rational&,
                     std::vector<std::size_t>&) const {
        if (value.is_zero()) throw PivotBreakdown(i, "zero pivot in sample run");
        return value;
    }
};

using RationalSeqs = detail::FactorSeqs<Rational>;

}  // namespace

FloatBands to_float_bands(const CyclicHeptaMatrix& h) {
    const auto& b = h.bands();
    FloatBands f;
    f.n = h.size();
    const auto conv = [](const std::vector<Rational>& src) {
        std::vector<double> out(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[i].to_double();
        return out;
    };
    f.diag = conv(b.diag);
    f.super1 = conv(b.super1);
    f.super2 = conv(b.super2);
    f.super3 = conv(b.super3);
    f.sub1 = conv(b.sub1);
    f.sub2 = conv(b.sub2);
    f.sub3 = conv(b.sub3);
    return f;
}

namespace detail {

Factorization factor_symbolic(const CyclicHeptaMatrix& h) {
    return factor_bands<RatFunc>(ExactBandsView{h}, ExactPivotPolicy{});
}

std::optional<FactorSeqs<Rational>> evaluate_at(const Factorization& f, const Rational& tau) {
    RationalSeqs out;
    out.n = f.n;
    out.substituted = f.substituted;
    out.mul_div_count = f.mul_div_count;
    const auto eval_seq = [&tau](const std::vector<RatFunc>& src, std::vector<Rational>& dst) {
        dst.assign(src.size(), Rational(0));
        for (std::size_t k = 0; k < src.size(); ++k) {
            if (src[k].is_zero()) continue;
            const Rational den = src[k].den().eval(tau);
            if (den.is_zero()) return false;
            dst[k] = src[k].num().eval(tau) / den;
        }
        return true;
    };
    if (!eval_seq(f.pivot, out.pivot) || !eval_seq(f.minors, out.minors) ||
        !eval_seq(f.lsub1, out.lsub1) || !eval_seq(f.lsub2, out.lsub2) ||
        !eval_seq(f.lsub3, out.lsub3) || !eval_seq(f.usuper1, out.usuper1) ||
        !eval_seq(f.usuper2, out.usuper2) || !eval_seq(f.usuper3, out.usuper3) ||
        !eval_seq(f.lrow_pen, out.lrow_pen) || !eval_seq(f.lrow_last, out.lrow_last) ||
        !eval_seq(f.ucol_pen, out.ucol_pen) || !eval_seq(f.ucol_last, out.ucol_last))
        return std::nullopt;
    for (std::size_t i = 1; i <= f.n; ++i)
        if (out.pivot[i].is_zero()) return std::nullopt;
    return out;
}

}  // namespace detail

// The termwise field arithmetic of factor_symbolic is exact but slow once a
// symbol is in play: every operation pays polynomial gcds. Each sequence
// entry, however, is a ratio of bordered minors of the perturbed matrix
//   L[i,j] = det(...)/minor_j,   U[i,j] = det(...)/minor_{i-1},
// whose numerator degree is bounded by the substitution count. factor
// therefore evaluates the factorization at small integer points t = tau
// (plain rational runs) and interpolates every entry against its known
// minor denominator, cross-checking at one extra point.
Factorization factor(const CyclicHeptaMatrix& h) {
    const std::size_t n = h.size();
    std::vector<std::size_t> substituted;
    std::vector<std::size_t> zero_hits(n + 1, 0);
    std::vector<Rational> taus;
    std::vector<RationalSeqs> samples;

    // Discovery loop: a pivot of the perturbed matrix has numerator degree
    // at most |substituted|, so vanishing at |substituted|+1 distinct sample
    // points means it is identically zero and gets the symbol.
    long next_tau = 1;
    while (samples.size() < substituted.size() + 2) {
        if (next_tau > 100000) throw Error("internal: sample budget exhausted in factor");
        const Rational tau(next_tau++);
        try {
            samples.push_back(detail::factor_bands<Rational>(
                SampledBandsView{h, substituted, tau}, AbortOnZeroPivotPolicy{}));
            taus.push_back(tau);
        } catch (const PivotBreakdown& e) {
            const std::size_t i = e.index();
            if (++zero_hits[i] > substituted.size()) {
                substituted.insert(
                    std::upper_bound(substituted.begin(), substituted.end(), i), i);
                std::fill(zero_hits.begin(), zero_hits.end(), 0);
                taus.clear();
                samples.clear();
                next_tau = 1;
            }
        }
    }

    Factorization f;
    f.n = n;
    f.substituted = substituted;
    f.mul_div_count = samples.front().mul_div_count;
    const auto lift_all = [&f](const RationalSeqs& s) {
        const auto lift = [](const std::vector<Rational>& src, std::vector<RatFunc>& dst) {
            dst.assign(src.size(), RatFunc());
            for (std::size_t k = 0; k < src.size(); ++k) dst[k] = RatFunc(src[k]);
        };
        lift(s.pivot, f.pivot);
        lift(s.minors, f.minors);
        lift(s.lsub1, f.lsub1);
        lift(s.lsub2, f.lsub2);
        lift(s.lsub3, f.lsub3);
        lift(s.usuper1, f.usuper1);
        lift(s.usuper2, f.usuper2);
        lift(s.usuper3, f.usuper3);
        lift(s.lrow_pen, f.lrow_pen);
        lift(s.lrow_last, f.lrow_last);
        lift(s.ucol_pen, f.ucol_pen);
        lift(s.ucol_last, f.ucol_last);
    };
    if (substituted.empty()) {
        // no symbol anywhere: the first sample already is the factorization
        lift_all(samples.front());
        return f;
    }

    const std::size_t fit = substituted.size() + 1;  // samples.size() == fit + 1
    const std::vector<Rational> xs_fit(taus.begin(), taus.begin() + fit);
    const Rational& x_check = taus.back();

    // running minors are polynomials in t
    std::vector<Poly> minor_poly(n + 1);
    f.minors.assign(n + 1, RatFunc());
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Rational> ys(fit);
        for (std::size_t m = 0; m < fit; ++m) ys[m] = samples[m].minors[j];
        Poly p = detail::lagrange_interpolate(xs_fit, ys);
        if (p.eval(x_check) != samples[fit].minors[j])
            throw Error("internal: minor interpolation mismatch at index " + std::to_string(j));
        f.minors[j] = RatFunc(p);
        minor_poly[j] = std::move(p);
    }
    f.pivot.assign(n + 1, RatFunc());
    for (std::size_t i = 1; i <= n; ++i)
        f.pivot[i] = RatFunc(minor_poly[i], minor_poly[i - 1]);

    // every other sequence entry is P(t)/minor_K(t) with deg P bounded by
    // the substitution count; minor_K(tau_m) comes straight from the samples
    const auto build = [&](std::vector<RatFunc>& dst, auto accessor, std::size_t lo,
                           std::size_t hi, auto den_index) {
        dst.assign(n + 1, RatFunc());
        std::vector<Rational> ys(fit);
        for (std::size_t idx = lo; idx <= hi; ++idx) {
            const Rational& first = accessor(samples[0], idx);
            bool constant = true;
            for (std::size_t m = 1; m < samples.size() && constant; ++m)
                constant = accessor(samples[m], idx) == first;
            if (constant) {
                dst[idx] = RatFunc(first);
                continue;
            }
            const std::size_t k = den_index(idx);
            for (std::size_t m = 0; m < fit; ++m)
                ys[m] = accessor(samples[m], idx) * samples[m].minors[k];
            Poly p = detail::lagrange_interpolate(xs_fit, ys);
            if (p.eval(x_check) != accessor(samples[fit], idx) * samples[fit].minors[k])
                throw Error("internal: factor interpolation mismatch at index " +
                            std::to_string(idx));
            dst[idx] = RatFunc(std::move(p), minor_poly[k]);
        }
    };
    const auto prev = [](std::size_t idx) { return idx - 1; };
    const auto self = [](std::size_t idx) { return idx; };
    build(f.lsub1, [](const RationalSeqs& s, std::size_t i) { return s.lsub1[i]; }, 2, n - 2,
          prev);
    build(f.lsub2, [](const RationalSeqs& s, std::size_t i) { return s.lsub2[i]; }, 3, n - 2,
          [](std::size_t idx) { return idx - 2; });
    build(f.lsub3, [](const RationalSeqs& s, std::size_t i) { return s.lsub3[i]; }, 4, n - 2,
          [](std::size_t idx) { return idx - 3; });
    build(f.usuper1, [](const RationalSeqs& s, std::size_t i) { return s.usuper1[i]; }, 1, n - 3,
          prev);
    build(f.usuper2, [](const RationalSeqs& s, std::size_t i) { return s.usuper2[i]; }, 1, n - 4,
          prev);
    build(f.usuper3, [](const RationalSeqs& s, std::size_t i) { return s.usuper3[i]; }, 1, n - 5,
          prev);
    build(f.lrow_pen, [](const RationalSeqs& s, std::size_t i) { return s.lrow_pen[i]; }, 1,
          n - 2, self);
    build(f.lrow_last, [](const RationalSeqs& s, std::size_t i) { return s.lrow_last[i]; }, 1,
          n - 1, self);
    build(f.ucol_pen, [](const RationalSeqs& s, std::size_t i) { return s.ucol_pen[i]; }, 1,
          n - 2, prev);
    build(f.ucol_last, [](const RationalSeqs& s, std::size_t i) { return s.ucol_last[i]; }, 1,
          n - 1, prev);
    return f;
}

FloatFactorization factor(const FloatBands& h, const FloatOptions& opts) {
    if (h.n < 8)
        throw DimensionTooSmall("float factor: n >= 8 required, got " + std::to_string(h.n));
    for (const auto* band : {&h.diag, &h.super1, &h.super2, &h.super3, &h.sub1, &h.sub2, &h.sub3})
        if (band->size() != h.n)
            throw LengthMismatch("float factor: band length " + std::to_string(band->size()) +
                                 " vs n = " + std::to_string(h.n));
    return detail::factor_bands<double>(FloatBandsView{h}, FloatPivotPolicy{opts});
}

Rational determinant(const Factorization& f) { return f.minors[f.n].eval_at_zero(); }

Rational determinant(const CyclicHeptaMatrix& h) { return determinant(factor(h)); }

double determinant(const FloatFactorization& f) { return f.minors[f.n]; }

std::vector<Rational> leading_minors(const Factorization& f) {
    std::vector<Rational> out(f.n + 1);
    for (std::size_t i = 0; i <= f.n; ++i) {
        try {
            out[i] = f.minors[i].eval_at_zero();
        } catch (const PoleAtZero&) {
            throw PoleAtZero("leading minor " + std::to_string(i) + " has a pole at t = 0");
        }
    }
    return out;
}

LUPair reconstruct_lu(const Factorization& f) {
    const std::size_t n = f.n;
    LUPair lu{DenseMatrix<RatFunc>(n, n), DenseMatrix<RatFunc>(n, n), f.substituted};
    auto& lo = lu.lower;
    auto& up = lu.upper;
    for (std::size_t i = 1; i <= n; ++i) lo(i - 1, i - 1) = RatFunc(1);
    for (std::size_t i = 2; i + 2 <= n; ++i) lo(i - 1, i - 2) = f.lsub1[i];
    for (std::size_t i = 3; i + 2 <= n; ++i) lo(i - 1, i - 3) = f.lsub2[i];
    for (std::size_t i = 4; i + 2 <= n; ++i) lo(i - 1, i - 4) = f.lsub3[i];
    for (std::size_t j = 1; j + 2 <= n; ++j) lo(n - 2, j - 1) = f.lrow_pen[j];
    for (std::size_t j = 1; j + 1 <= n; ++j) lo(n - 1, j - 1) = f.lrow_last[j];

    for (std::size_t i = 1; i <= n; ++i) up(i - 1, i - 1) = f.pivot[i];
    for (std::size_t i = 1; i + 3 <= n; ++i) up(i - 1, i) = f.usuper1[i];
    for (std::size_t i = 1; i + 4 <= n; ++i) up(i - 1, i + 1) = f.usuper2[i];
    for (std::size_t i = 1; i + 5 <= n; ++i) up(i - 1, i + 2) = f.usuper3[i];
    for (std::size_t j = 1; j + 2 <= n; ++j) up(j - 1, n - 2) = f.ucol_pen[j];
    for (std::size_t j = 1; j + 1 <= n; ++j) up(j - 1, n - 1) = f.ucol_last[j];
    return lu;
}

}  // namespace hepta
