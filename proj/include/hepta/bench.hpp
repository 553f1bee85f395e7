#ifndef HEPTA_BENCH_HPP_
#define HEPTA_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace hepta {

struct BenchRecord {
    std::size_t n = 0;
    std::string mode;           // "exact" or "float"
    double factor_seconds = 0;  // medians over trials
    double solve_seconds = 0;
    double invert_seconds = 0;
    std::size_t op_count = 0;        // multiplications + divisions in factor
    std::size_t substituted = 0;     // exact mode only
    std::size_t breakdowns = 0;      // float mode: PivotBreakdown occurrences
};

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::string mode = "float";
    std::size_t trials = 3;
    std::uint64_t seed = 1;
    bool allow_large_exact = false;  // lifts the n <= 512 exact-mode cap
};

// Exact mode is capped at n <= 512 unless explicitly overridden; throws
// InvalidArgument when the cap is exceeded or the options are malformed.
std::vector<BenchRecord> run_bench(const BenchOptions& opts);

}  // namespace hepta

#endif  // HEPTA_BENCH_HPP_
