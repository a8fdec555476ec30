#include "maxmin_ident/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxmin {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("Grid: need at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw std::invalid_argument("Grid: points must be finite");
    }
    if (i > 0 && !(points_[i - 1] < points_[i])) {
      throw std::invalid_argument("Grid: points must be strictly increasing");
    }
  }
}

Grid Grid::uniform(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("Grid::uniform: count < 2");
  if (!(lo < hi)) throw std::invalid_argument("Grid::uniform: lo >= hi");
  std::vector<double> pts(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = lo + h * static_cast<double>(i);
  }
  pts.back() = hi;
  return Grid(std::move(pts));
}

Grid Grid::geometric(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("Grid::geometric: count < 2");
  if (!(0.0 < lo && lo < hi)) {
    throw std::invalid_argument("Grid::geometric: need 0 < lo < hi");
  }
  std::vector<double> pts(count);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  const double h = (lhi - llo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = std::exp(llo + h * static_cast<double>(i));
  }
  pts.front() = lo;
  pts.back() = hi;
  return Grid(std::move(pts));
}

std::size_t Grid::segment(double x) const {
  if (x <= points_.front()) return 0;
  if (x >= points_.back()) return points_.size() - 2;
  const auto it = std::upper_bound(points_.begin(), points_.end(), x);
  return static_cast<std::size_t>(it - points_.begin()) - 1;
}

}  // namespace maxmin
