#pragma once

#include <vector>

#include "maxmin_ident/grid.hpp"

namespace maxmin {

// Tail behavior outside the grid. The theorems' support conditions hinge on
// exact endpoint values, so the limits at +-infinity are explicit fields
// rather than a convention.
enum class LowerTail {
  Zero,        // eval(-inf) = 0
  ClampFirst,  // eval(-inf) = first value
};
enum class UpperTail {
  One,        // eval(+inf) = 1
  ClampLast,  // eval(+inf) = last value
};

// Piecewise-linear nondecreasing function on a finite grid, values in [0,1].
// Finite arguments beyond the grid clamp to the nearest endpoint value; the
// infinities evaluate per the tail fields. This is the common currency of
// reconstruction outputs.
class GridCdf {
 public:
  GridCdf(Grid grid, std::vector<double> values,
          LowerTail lower = LowerTail::Zero, UpperTail upper = UpperTail::One);

  double eval(double x) const;

  // Generalized inverse inf{x : F(x) >= u} for u in (0,1), linear on strictly
  // increasing segments. Flat regions resolve to their left endpoint. When u
  // is never reached on the grid the result clamps to grid.max().
  double quantile(double u) const;

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  LowerTail lower_tail() const { return lower_; }
  UpperTail upper_tail() const { return upper_; }

 private:
  Grid grid_;
  std::vector<double> values_;
  LowerTail lower_;
  UpperTail upper_;
};

}  // namespace maxmin
