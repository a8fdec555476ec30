#include "maxmin_ident/grid_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxmin_ident/extended_real.hpp"

namespace maxmin {

GridCdf::GridCdf(Grid grid, std::vector<double> values, LowerTail lower,
                 UpperTail upper)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      lower_(lower),
      upper_(upper) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("GridCdf: values/grid size mismatch");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("GridCdf: values must lie in [0,1]");
    }
    if (i > 0 && v < values_[i - 1]) {
      throw std::invalid_argument("GridCdf: values must be nondecreasing");
    }
  }
}

double GridCdf::eval(double x) const {
  if (x == kMinusInf) return lower_ == LowerTail::Zero ? 0.0 : values_.front();
  if (x == kPlusInf) return upper_ == UpperTail::One ? 1.0 : values_.back();
  if (x <= grid_.min()) {
    return x < grid_.min() && lower_ == LowerTail::Zero ? 0.0 : values_.front();
  }
  if (x >= grid_.max()) return values_.back();
  const std::size_t i = grid_.segment(x);
  const double x0 = grid_[i];
  const double x1 = grid_[i + 1];
  const double t = (x - x0) / (x1 - x0);
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

double GridCdf::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("GridCdf::quantile: u must be in (0,1)");
  }
  // First index whose value reaches u; everything left of it is below u.
  const auto it = std::lower_bound(values_.begin(), values_.end(), u);
  if (it == values_.begin()) return grid_.min();
  if (it == values_.end()) return grid_.max();
  const std::size_t j = static_cast<std::size_t>(it - values_.begin());
  if (values_[j] == u) return grid_[j];
  const double v0 = values_[j - 1];
  const double v1 = values_[j];
  const double t = (u - v0) / (v1 - v0);
  return grid_[j - 1] + t * (grid_[j] - grid_[j - 1]);
}

}  // namespace maxmin
