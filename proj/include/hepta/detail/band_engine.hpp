#ifndef HEPTA_DETAIL_BAND_ENGINE_HPP_
#define HEPTA_DETAIL_BAND_ENGINE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "hepta/detail/symbolic_sum.hpp"

namespace hepta::detail {

// Sequences of the bordered LU factorization, 1-based (slot 0 unused except
// minors[0] = 1). The factors have the shape
//
//   L: unit lower triangular with three subdiagonals; rows n-1 and n dense.
//   U: upper triangular with three superdiagonals; columns n-1 and n dense,
//      absorbing the wrap-around corners.
//
// minors[i] is the product of the first i pivots and equals the i-th
// leading principal minor of the (possibly perturbed) matrix.
template <typename Field>
struct FactorSeqs {
    std::size_t n = 0;
    std::vector<Field> pivot;      // [1..n]   U diagonal
    std::vector<Field> minors;     // [0..n]   running products of pivots
    std::vector<Field> lsub1;      // [2..n-2] L first subdiagonal
    std::vector<Field> lsub2;      // [3..n-2] L second subdiagonal
    std::vector<Field> lsub3;      // [4..n-2] L third subdiagonal
    std::vector<Field> usuper1;    // [1..n-3] U first superdiagonal
    std::vector<Field> usuper2;    // [1..n-4] U second superdiagonal
    std::vector<Field> usuper3;    // [1..n-5] U third superdiagonal (input band)
    std::vector<Field> lrow_pen;   // [1..n-2] L row n-1
    std::vector<Field> lrow_last;  // [1..n-1] L row n
    std::vector<Field> ucol_pen;   // [1..n-2] U column n-1
    std::vector<Field> ucol_last;  // [1..n-1] U column n
    std::vector<std::size_t> substituted;  // pivot indices replaced symbolically
    std::size_t mul_div_count = 0;
};

// Bands must provide n() and 1-based accessors diag/super1/super2/super3/
// sub1/sub2/sub3 returning Field. Policy must provide
//   Field resolve(std::size_t index, Field pivot_value, Field diag_value,
//                 std::vector<std::size_t>& substituted)
// which passes a usable pivot through, substitutes a replacement, or
// throws. Multiplications and divisions are counted; the count is a fixed
// function of n.
template <typename Field, typename Bands, typename Policy>
FactorSeqs<Field> factor_bands(const Bands& h, Policy&& policy) {
    const std::size_t n = h.n();
    FactorSeqs<Field> s;
    s.n = n;
    s.pivot.assign(n + 1, Field{});
    s.minors.assign(n + 1, Field{});
    s.lsub1.assign(n + 1, Field{});
    s.lsub2.assign(n + 1, Field{});
    s.lsub3.assign(n + 1, Field{});
    s.usuper1.assign(n + 1, Field{});
    s.usuper2.assign(n + 1, Field{});
    s.usuper3.assign(n + 1, Field{});
    s.lrow_pen.assign(n + 1, Field{});
    s.lrow_last.assign(n + 1, Field{});
    s.ucol_pen.assign(n + 1, Field{});
    s.ucol_last.assign(n + 1, Field{});

    std::size_t ops = 0;
    const auto mul = [&ops](const Field& x, const Field& y) {
        ++ops;
        return x * y;
    };
    const auto div = [&ops](const Field& x, const Field& y) {
        ++ops;
        return x / y;
    };
    const auto pivot_at = [&](std::size_t i, Field value) {
        return policy.resolve(i, std::move(value), h.diag(i), s.substituted);
    };

    auto& pv = s.pivot;
    auto& mn = s.minors;

    for (std::size_t i = 1; i + 5 <= n; ++i) s.usuper3[i] = h.super3(i);

    // Leading 3x3 corner of the elimination plus the first border entries.
    pv[1] = pivot_at(1, h.diag(1));
    mn[0] = Field(1);
    mn[1] = mul(pv[1], mn[0]);
    s.usuper1[1] = h.super1(1);
    s.usuper2[1] = h.super2(1);
    s.lrow_pen[1] = div(h.super2(n - 1), pv[1]);
    s.lrow_last[1] = div(h.super1(n), pv[1]);
    s.ucol_pen[1] = h.sub2(1);
    s.ucol_last[1] = h.sub1(1);
    s.lsub1[2] = div(h.sub1(2), pv[1]);
    s.lsub2[3] = div(h.sub2(3), pv[1]);

    pv[2] = pivot_at(2, h.diag(2) - mul(s.lsub1[2], s.usuper1[1]));
    mn[2] = mul(pv[2], mn[1]);
    s.lrow_pen[2] = div(-mul(s.lrow_pen[1], s.usuper1[1]), pv[2]);
    s.lrow_last[2] = div(h.super2(n) - mul(s.lrow_last[1], s.usuper1[1]), pv[2]);
    s.ucol_pen[2] = -mul(s.lsub1[2], s.ucol_pen[1]);
    s.ucol_last[2] = h.sub2(2) - mul(s.lsub1[2], s.ucol_last[1]);
    s.usuper1[2] = h.super1(2) - mul(s.lsub1[2], s.usuper2[1]);
    s.lsub1[3] = div(h.sub1(3) - mul(s.lsub2[3], s.usuper1[1]), pv[2]);

    pv[3] = pivot_at(3, h.diag(3) - mul(s.lsub2[3], s.usuper2[1]) - mul(s.lsub1[3], s.usuper1[2]));
    mn[3] = mul(pv[3], mn[2]);
    s.lrow_pen[3] =
        div(-(mul(s.lrow_pen[1], s.usuper2[1]) + mul(s.lrow_pen[2], s.usuper1[2])), pv[3]);
    s.lrow_last[3] =
        div(-(mul(s.lrow_last[1], s.usuper2[1]) + mul(s.lrow_last[2], s.usuper1[2])), pv[3]);
    s.ucol_pen[3] = -mul(s.lsub2[3], s.ucol_pen[1]) - mul(s.lsub1[3], s.ucol_pen[2]);
    s.ucol_last[3] = -mul(s.lsub2[3], s.ucol_last[1]) - mul(s.lsub1[3], s.ucol_last[2]);

    // Band sweep.
    for (std::size_t i = 4; i + 2 <= n; ++i) {
        s.lsub3[i] = div(h.sub3(i), pv[i - 3]);
        s.lsub2[i] = div(h.sub2(i) - mul(s.lsub3[i], s.usuper1[i - 3]), pv[i - 2]);
        s.lsub1[i] = div(h.sub1(i) - mul(s.lsub3[i], s.usuper2[i - 3]) -
                             mul(s.lsub2[i], s.usuper1[i - 2]),
                         pv[i - 1]);
        s.usuper2[i - 2] = h.super2(i - 2) - mul(s.lsub1[i - 2], h.super3(i - 3));
        s.usuper1[i - 1] = h.super1(i - 1) - mul(s.lsub1[i - 1], s.usuper2[i - 2]) -
                           mul(s.lsub2[i - 1], h.super3(i - 3));
        pv[i] = pivot_at(i, h.diag(i) - mul(s.lsub3[i], h.super3(i - 3)) -
                                mul(s.lsub2[i], s.usuper2[i - 2]) -
                                mul(s.lsub1[i], s.usuper1[i - 1]));
        mn[i] = mul(pv[i], mn[i - 1]);
    }

    // Interior of the dense borders.
    for (std::size_t i = 4; i + 5 <= n; ++i) {
        s.lrow_pen[i] = div(-(mul(s.lrow_pen[i - 3], h.super3(i - 3)) +
                              mul(s.lrow_pen[i - 2], s.usuper2[i - 2]) +
                              mul(s.lrow_pen[i - 1], s.usuper1[i - 1])),
                            pv[i]);
        s.ucol_pen[i] = -(mul(s.lsub3[i], s.ucol_pen[i - 3]) + mul(s.lsub2[i], s.ucol_pen[i - 2]) +
                          mul(s.lsub1[i], s.ucol_pen[i - 1]));
    }
    for (std::size_t i = 4; i + 4 <= n; ++i) {
        s.lrow_last[i] = div(-(mul(s.lrow_last[i - 3], h.super3(i - 3)) +
                               mul(s.lrow_last[i - 2], s.usuper2[i - 2]) +
                               mul(s.lrow_last[i - 1], s.usuper1[i - 1])),
                             pv[i]);
        s.ucol_last[i] =
            -(mul(s.lsub3[i], s.ucol_last[i - 3]) + mul(s.lsub2[i], s.ucol_last[i - 2]) +
              mul(s.lsub1[i], s.ucol_last[i - 1]));
    }

    // Closing entries where the borders meet the band.
    s.lrow_pen[n - 4] = div(h.sub3(n - 1) - mul(s.lrow_pen[n - 7], h.super3(n - 7)) -
                                mul(s.lrow_pen[n - 6], s.usuper2[n - 6]) -
                                mul(s.lrow_pen[n - 5], s.usuper1[n - 5]),
                            pv[n - 4]);
    s.lrow_pen[n - 3] = div(h.sub2(n - 1) - mul(s.lrow_pen[n - 6], h.super3(n - 6)) -
                                mul(s.lrow_pen[n - 5], s.usuper2[n - 5]) -
                                mul(s.lrow_pen[n - 4], s.usuper1[n - 4]),
                            pv[n - 3]);
    s.lrow_pen[n - 2] = div(h.sub1(n - 1) - mul(s.lrow_pen[n - 5], h.super3(n - 5)) -
                                mul(s.lrow_pen[n - 4], s.usuper2[n - 4]) -
                                mul(s.lrow_pen[n - 3], s.usuper1[n - 3]),
                            pv[n - 2]);
    s.ucol_pen[n - 4] = h.super3(n - 4) - mul(s.lsub3[n - 4], s.ucol_pen[n - 7]) -
                        mul(s.lsub2[n - 4], s.ucol_pen[n - 6]) -
                        mul(s.lsub1[n - 4], s.ucol_pen[n - 5]);
    s.ucol_pen[n - 3] = h.super2(n - 3) - mul(s.lsub3[n - 3], s.ucol_pen[n - 6]) -
                        mul(s.lsub2[n - 3], s.ucol_pen[n - 5]) -
                        mul(s.lsub1[n - 3], s.ucol_pen[n - 4]);
    s.ucol_pen[n - 2] = h.super1(n - 2) - mul(s.lsub3[n - 2], s.ucol_pen[n - 5]) -
                        mul(s.lsub2[n - 2], s.ucol_pen[n - 4]) -
                        mul(s.lsub1[n - 2], s.ucol_pen[n - 3]);
    s.lrow_last[n - 3] = div(h.sub3(n) - mul(s.lrow_last[n - 6], h.super3(n - 6)) -
                                 mul(s.lrow_last[n - 5], s.usuper2[n - 5]) -
                                 mul(s.lrow_last[n - 4], s.usuper1[n - 4]),
                             pv[n - 3]);
    s.lrow_last[n - 2] = div(h.sub2(n) - mul(s.lrow_last[n - 5], h.super3(n - 5)) -
                                 mul(s.lrow_last[n - 4], s.usuper2[n - 4]) -
                                 mul(s.lrow_last[n - 3], s.usuper1[n - 3]),
                             pv[n - 2]);
    s.ucol_last[n - 3] = h.super3(n - 3) - mul(s.lsub3[n - 3], s.ucol_last[n - 6]) -
                         mul(s.lsub2[n - 3], s.ucol_last[n - 5]) -
                         mul(s.lsub1[n - 3], s.ucol_last[n - 4]);
    s.ucol_last[n - 2] = h.super2(n - 2) - mul(s.lsub3[n - 2], s.ucol_last[n - 5]) -
                         mul(s.lsub2[n - 2], s.ucol_last[n - 4]) -
                         mul(s.lsub1[n - 2], s.ucol_last[n - 3]);

    // Trailing 2x2 block: dot products of the borders.
    s.ucol_last[n - 1] =
        h.super1(n - 1) -
        dot_sum(s.lrow_pen, s.ucol_last, n - 2, mn[n - 2], s.substituted.size(), ops);
    pv[n - 1] = pivot_at(
        n - 1, h.diag(n - 1) -
                   dot_sum(s.lrow_pen, s.ucol_pen, n - 2, mn[n - 2], s.substituted.size(), ops));
    mn[n - 1] = mul(pv[n - 1], mn[n - 2]);

    s.lrow_last[n - 1] =
        div(h.sub1(n) -
                dot_sum(s.lrow_last, s.ucol_pen, n - 2, mn[n - 2], s.substituted.size(), ops),
            pv[n - 1]);

    pv[n] = pivot_at(
        n, h.diag(n) -
               dot_sum(s.lrow_last, s.ucol_last, n - 1, mn[n - 1], s.substituted.size(), ops));
    mn[n] = mul(pv[n], mn[n - 1]);

    s.mul_div_count = ops;
    return s;
}

// Forward/back substitution through the bordered factors; rhs and the
// result are 0-based vectors of length n.
template <typename Field>
std::vector<Field> solve_bands(const FactorSeqs<Field>& s, const std::vector<Field>& rhs) {
    const std::size_t n = s.n;
    std::vector<Field> y(n + 1, Field{});
    y[1] = rhs[0];
    y[2] = rhs[1] - s.lsub1[2] * y[1];
    y[3] = rhs[2] - s.lsub2[3] * y[1] - s.lsub1[3] * y[2];
    for (std::size_t i = 4; i + 2 <= n; ++i) {
        y[i] = rhs[i - 1] - s.lsub3[i] * y[i - 3] - s.lsub2[i] * y[i - 2] - s.lsub1[i] * y[i - 1];
    }
    std::size_t ops = 0;
    y[n - 1] = rhs[n - 2] -
               dot_sum(s.lrow_pen, y, n - 2, s.minors[n - 2], s.substituted.size(), ops);
    y[n] = rhs[n - 1] -
           dot_sum(s.lrow_last, y, n - 1, s.minors[n - 1], s.substituted.size(), ops);

    std::vector<Field> x(n + 1, Field{});
    x[n] = y[n] / s.pivot[n];
    x[n - 1] = (y[n - 1] - s.ucol_last[n - 1] * x[n]) / s.pivot[n - 1];
    x[n - 2] =
        (y[n - 2] - s.ucol_pen[n - 2] * x[n - 1] - s.ucol_last[n - 2] * x[n]) / s.pivot[n - 2];
    for (std::size_t i = n - 3; i >= 1; --i) {
        Field t = y[i] - s.usuper1[i] * x[i + 1];
        if (i + 4 <= n) t = t - s.usuper2[i] * x[i + 2];
        if (i + 5 <= n) t = t - s.usuper3[i] * x[i + 3];
        t = t - s.ucol_pen[i] * x[n - 1] - s.ucol_last[i] * x[n];
        x[i] = t / s.pivot[i];
    }
    x.erase(x.begin());
    return x;
}

}  // namespace hepta::detail

#endif  // HEPTA_DETAIL_BAND_ENGINE_HPP_
