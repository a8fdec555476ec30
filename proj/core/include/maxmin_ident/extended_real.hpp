#pragma once

#include <cmath>
#include <limits>

namespace maxmin {

// Extended real line: plain IEEE doubles with +-infinity as first-class
// evaluation points. NaN is excluded by construction everywhere, so the
// usual double ordering is the total order of the extended reals.
inline constexpr double kPlusInf = std::numeric_limits<double>::infinity();
inline constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace maxmin
