#ifndef HEPTA_GENERATE_HPP_
#define HEPTA_GENERATE_HPP_

#include <cstdint>

#include "hepta/band_io.hpp"
#include "hepta/hepta_matrix.hpp"

namespace hepta {

struct GenerateOptions {
    std::size_t n = 8;
    std::uint64_t seed = 0;
    std::size_t zero_pivots = 0;  // at most 3
    MatrixKind kind = MatrixKind::cyclic;
};

// Deterministic pseudo-random small-integer bands. The result is always
// nonsingular and its factorization substitutes exactly `zero_pivots`
// pivots: the generator re-assigns d at the chosen indices so the
// corresponding pivots are exactly zero (d_i := d_i - pivot_i), redrawing
// when accidental zero pivots or cascades disturb the requested pattern.
// Throws GenerationFailed when the pattern cannot be hit within the retry
// budget, reporting the best achieved count.
CyclicHeptaMatrix generate(const GenerateOptions& opts);

}  // namespace hepta

#endif  // HEPTA_GENERATE_HPP_
