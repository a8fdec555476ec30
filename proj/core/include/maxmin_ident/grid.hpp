#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace maxmin {

// Strictly increasing sequence of at least two finite points.
class Grid {
 public:
  explicit Grid(std::vector<double> points);

  static Grid uniform(double lo, double hi, std::size_t count);
  // Geometrically spaced grid, requires 0 < lo < hi.
  static Grid geometric(double lo, double hi, std::size_t count);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double min() const { return points_.front(); }
  double max() const { return points_.back(); }

  // Index of the segment [points[i], points[i+1]] containing x; clamps to the
  // first/last segment for x outside the range.
  std::size_t segment(double x) const;

 private:
  std::vector<double> points_;
};

}  // namespace maxmin
