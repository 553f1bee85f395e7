#ifndef HEPTA_FLOAT_SCALAR_HPP_
#define HEPTA_FLOAT_SCALAR_HPP_

#include <algorithm>
#include <cmath>

namespace hepta {

// Thresholds for treating a float-mode value as zero. A value is zero when
// |value| <= eps_abs + eps_rel * max(1, |scale|), scale being the diagonal
// entry under the pivot.
struct FloatOptions {
    double eps_rel = 1e-12;
    double eps_abs = 0.0;
};

inline bool float_is_zero(double value, double scale, const FloatOptions& opts = {}) {
    return std::abs(value) <= opts.eps_abs + opts.eps_rel * std::max(1.0, std::abs(scale));
}

}  // namespace hepta

#endif  // HEPTA_FLOAT_SCALAR_HPP_
