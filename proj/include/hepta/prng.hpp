#ifndef HEPTA_PRNG_HPP_
#define HEPTA_PRNG_HPP_

#include <cstdint>

namespace hepta {

// splitmix64; self-contained so generated streams are identical on every
// platform and standard library (std distributions are not portable).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at the
    // tiny spans used here.
    long range(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace hepta

#endif  // HEPTA_PRNG_HPP_
