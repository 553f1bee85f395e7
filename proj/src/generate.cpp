#include "hepta/generate.hpp"

#include <algorithm>
#include <string>

#include "hepta/factorization.hpp"
#include "hepta/prng.hpp"

namespace hepta {

namespace {

constexpr std::size_t kMaxAttempts = 64;

std::vector<Rational> draw_band(SplitMix64& rng, std::size_t n) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(rng.range(-9, 9));
    return v;
}

// Distinct substitution targets in [1, n-2], sorted ascending.
std::vector<std::size_t> draw_targets(SplitMix64& rng, std::size_t n, std::size_t count) {
    std::vector<std::size_t> targets;
    while (targets.size() < count) {
        const auto i = static_cast<std::size_t>(rng.range(1, static_cast<long>(n - 2)));
        if (std::find(targets.begin(), targets.end(), i) == targets.end()) targets.push_back(i);
    }
    std::sort(targets.begin(), targets.end());
    return targets;
}

}  // namespace

CyclicHeptaMatrix generate(const GenerateOptions& opts) {
    if (opts.n < 8)
        throw DimensionTooSmall("generate: n >= 8 required, got " + std::to_string(opts.n));
    if (opts.zero_pivots > 3)
        throw InvalidArgument("generate: zero_pivots must be at most 3, got " +
                              std::to_string(opts.zero_pivots));

    const std::size_t n = opts.n;
    SplitMix64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + 0x853C49E6748FEA9BULL + n);
    std::size_t best_achieved = 0;

    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Bands bands;
        bands.diag = draw_band(rng, n);
        bands.super1 = draw_band(rng, n);
        bands.super2 = draw_band(rng, n);
        bands.super3 = draw_band(rng, n);
        bands.sub1 = draw_band(rng, n);
        bands.sub2 = draw_band(rng, n);
        bands.sub3 = draw_band(rng, n);
        for (std::size_t i = 0; i < 3; ++i) bands.sub3[i] = Rational(0);
        for (std::size_t i = n - 3; i < n; ++i) bands.super3[i] = Rational(0);

        const std::vector<std::size_t> targets = draw_targets(rng, n, opts.zero_pivots);
        // The first target is reached by a plain diagonal re-assignment. For
        // the later ones the pivot would already depend on t, so their rows
        // are decoupled from the left block up front, which pins pivot_i to
        // d_i and keeps every re-assignment a rational shift.
        for (std::size_t k = 1; k < targets.size(); ++k) {
            const std::size_t t = targets[k];
            if (t >= 2) bands.sub1[t - 1] = Rational(0);
            if (t >= 3) bands.sub2[t - 1] = Rational(0);
            if (t >= 4) bands.sub3[t - 1] = Rational(0);
        }

        CyclicHeptaMatrix h = CyclicHeptaMatrix::from_bands(n, bands);
        Factorization f = factor(h);
        if (!f.substituted.empty()) continue;  // accidental zero pivot: redraw

        for (const std::size_t t : targets) {
            bands.diag[t - 1] = bands.diag[t - 1] - f.pivot[t].as_rational();
        }
        h = CyclicHeptaMatrix::from_bands(n, bands);
        f = factor(h);
        best_achieved = std::max(best_achieved, f.substituted.size());
        if (f.substituted != targets) continue;  // cascade: redraw
        if (determinant(f).is_zero()) continue;  // keep instances invertible
        return h;
    }
    throw GenerationFailed(best_achieved,
                           "generate: could not hit " + std::to_string(opts.zero_pivots) +
                               " zero pivots after " + std::to_string(kMaxAttempts) +
                               " attempts (best achieved " + std::to_string(best_achieved) + ")");
}

}  // namespace hepta
