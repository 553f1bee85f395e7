#include "hepta/bench.hpp"

#include <algorithm>
#include <chrono>

#include "hepta/factorization.hpp"
#include "hepta/generate.hpp"
#include "hepta/prng.hpp"
#include "hepta/solve_invert.hpp"

namespace hepta {

namespace {

constexpr std::size_t kExactCap = 512;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2.0;
}

FloatBands random_float_bands(SplitMix64& rng, std::size_t n) {
    FloatBands b;
    b.n = n;
    const auto draw = [&rng, n]() {
        std::vector<double> v(n);
        for (auto& x : v) x = rng.unit() * 2.0 - 1.0;
        return v;
    };
    b.diag = draw();
    b.super1 = draw();
    b.super2 = draw();
    b.super3 = draw();
    b.sub1 = draw();
    b.sub2 = draw();
    b.sub3 = draw();
    for (std::size_t i = 0; i < 3; ++i) b.sub3[i] = 0.0;
    for (std::size_t i = n - 3; i < n; ++i) b.super3[i] = 0.0;
    return b;
}

BenchRecord bench_float(std::size_t n, std::size_t trials, SplitMix64& rng) {
    BenchRecord rec;
    rec.n = n;
    rec.mode = "float";
    std::vector<double> t_factor, t_solve, t_invert;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const FloatBands bands = random_float_bands(rng, n);
        std::vector<double> rhs(n);
        for (auto& x : rhs) x = rng.unit() * 2.0 - 1.0;
        try {
            auto start = std::chrono::steady_clock::now();
            const FloatFactorization f = factor(bands);
            t_factor.push_back(seconds_since(start));
            rec.op_count = f.mul_div_count;

            start = std::chrono::steady_clock::now();
            (void)solve(f, rhs);
            t_solve.push_back(seconds_since(start));

            start = std::chrono::steady_clock::now();
            std::vector<double> unit(n, 0.0);
            for (std::size_t col = 0; col < n; ++col) {
                unit[col] = 1.0;
                (void)solve(f, unit);
                unit[col] = 0.0;
            }
            t_invert.push_back(seconds_since(start));
        } catch (const PivotBreakdown&) {
            ++rec.breakdowns;  // recorded, not fatal
        }
    }
    if (!t_factor.empty()) rec.factor_seconds = median(t_factor);
    if (!t_solve.empty()) rec.solve_seconds = median(t_solve);
    if (!t_invert.empty()) rec.invert_seconds = median(t_invert);
    return rec;
}

BenchRecord bench_exact(std::size_t n, std::size_t trials, std::uint64_t seed, SplitMix64& rng) {
    BenchRecord rec;
    rec.n = n;
    rec.mode = "exact";
    std::vector<double> t_factor, t_solve, t_invert;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const CyclicHeptaMatrix h = generate({n, seed + trial, 0, MatrixKind::cyclic});
        std::vector<Rational> rhs(n);
        for (auto& x : rhs) x = Rational(rng.range(-9, 9));

        auto start = std::chrono::steady_clock::now();
        const Factorization f = factor(h);
        t_factor.push_back(seconds_since(start));
        rec.op_count = f.mul_div_count;
        rec.substituted = f.substituted.size();

        start = std::chrono::steady_clock::now();
        (void)solve(f, h, rhs);
        t_solve.push_back(seconds_since(start));

        start = std::chrono::steady_clock::now();
        (void)invert(h);
        t_invert.push_back(seconds_since(start));
    }
    rec.factor_seconds = median(t_factor);
    rec.solve_seconds = median(t_solve);
    rec.invert_seconds = median(t_invert);
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
    if (opts.sizes.empty()) throw InvalidArgument("bench: no sizes given");
    if (opts.trials == 0) throw InvalidArgument("bench: trials must be positive");
    if (opts.mode != "exact" && opts.mode != "float")
        throw InvalidArgument("bench: mode must be \"exact\" or \"float\"");
    if (opts.mode == "exact" && !opts.allow_large_exact) {
        for (const std::size_t n : opts.sizes) {
            if (n > kExactCap)
                throw InvalidArgument("bench: exact mode is capped at n <= " +
                                      std::to_string(kExactCap) + " (requested " +
                                      std::to_string(n) +
                                      "); pass --allow-large-exact to override");
        }
    }
    SplitMix64 rng(opts.seed);
    std::vector<BenchRecord> records;
    for (const std::size_t n : opts.sizes) {
        if (n < 8) throw DimensionTooSmall("bench: n >= 8 required, got " + std::to_string(n));
        records.push_back(opts.mode == "float" ? bench_float(n, opts.trials, rng)
                                               : bench_exact(n, opts.trials, opts.seed, rng));
    }
    return records;
}

}  // namespace hepta
