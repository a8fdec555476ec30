#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "maxmin_ident/distribution.hpp"
#include "maxmin_ident/extended_real.hpp"
#include "maxmin_ident/grid.hpp"

namespace maxmin {

// Denominator floor for generator formulas. Far below any statistically
// meaningful scale; evaluation under it is a domain error, not a value.
inline constexpr double kGeneratorFloor = 1e-300;

enum class GeneratorKind { MaxIndependent, MinIndependent };

// The dependence generator eta in point form: a positive function of n
// extended-real coordinates. Max-independent generators equal 1 exactly when
// any coordinate is +infinity; min-independent ones when any coordinate is
// -infinity. (The definition's limit for the min case reads 0, but the joint
// survival only factorizes in the limit if it is 1; see the module tests.)
class PointGenerator {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  PointGenerator(int arity, GeneratorKind kind, EvalFn eval, std::string name);

  double operator()(std::span<const double> xs) const;
  double operator()(std::initializer_list<double> xs) const {
    return (*this)(std::span<const double>(xs.begin(), xs.size()));
  }

  int arity() const { return arity_; }
  GeneratorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  int arity_;
  GeneratorKind kind_;
  EvalFn eval_;
  std::string name_;
};

// Half-open interval (lo, hi] with extended-real endpoints; P(X in B) is
// F(hi) - F(lo), which also covers (lo, inf) and (-inf, hi].
struct Interval {
  double lo = kMinusInf;
  double hi = kPlusInf;
  bool full_line() const { return lo == kMinusInf && hi == kPlusInf; }
};

// The generator in rectangle form (quasi-independence): a set function on
// products of intervals, equal to 1 whenever at least one side is the full
// line.
class RectGenerator {
 public:
  using EvalFn = std::function<double(std::span<const Interval>)>;

  RectGenerator(int arity, EvalFn eval, std::string name);

  double operator()(std::span<const Interval> rect) const;
  double operator()(std::initializer_list<Interval> rect) const {
    return (*this)(std::span<const Interval>(rect.begin(), rect.size()));
  }

  int arity() const { return arity_; }
  const std::string& name() const { return name_; }

 private:
  int arity_;
  EvalFn eval_;
  std::string name_;
};

// eta == 1: independent variables are max-independent (and min-, and quasi-).
PointGenerator independent_generator(int n, GeneratorKind kind);
RectGenerator independent_rect_generator(int n);

// The generator of (Y1,Y2) = (max(X0,X1), max(X0,X2)) for independent X's:
//   eta(y1,y2) = F0(min(y1,y2)) / (F0(y1) F0(y2)).
// Always >= 1 on its domain, despite the definition's stated range (0,1].
PointGenerator shared_component_generator(const Distribution& f0);
// Survival mirror for (min(X0,X1), min(X0,X2)):
//   eta(y1,y2) = S0(max(y1,y2)) / (S0(y1) S0(y2)).
PointGenerator shared_component_min_generator(const Distribution& f0);

// The shared-component pair generator written in the (z, y1, y2) slot
// convention of the triple couplings, z standing for min(y1,y2):
//   eta1(z,y1,y2) = F0(z) / (F0(y1) F0(y2)).
// Only meaningful with z tied to min(y1,y2); the couplings evaluate it there.
PointGenerator shared_component_generator3(const Distribution& f0);
PointGenerator shared_component_min_generator3(const Distribution& f0);

// Corner lift: evaluates the point generator at the tuple of upper endpoints,
// with full-line sides short-circuiting to 1. Exact for generators that are
// constant over rectangles (in particular the independent one).
RectGenerator lift_to_rect(const PointGenerator& g);

// Tabulated generator on a square lattice with bilinear interpolation inside
// and nearest-value clamping outside. Infinite coordinates evaluate to 1 per
// the kind's boundary limit.
PointGenerator tabulated_generator(const Grid& axis,
                                   std::vector<std::vector<double>> values,
                                   GeneratorKind kind);
// CSV lattice: header row of grid points, then one row of eta values per
// grid point.
PointGenerator tabulated_generator_from_csv(const std::string& path,
                                            GeneratorKind kind);

struct GeneratorValidation {
  double min_value = 0.0;
  double max_value = 0.0;
  bool positive = false;
  bool limit_ok = false;
  std::vector<std::string> violations;
  bool pass() const { return positive && limit_ok; }
};

// Probe-grid validation: min/max of eta over the probe lattice (arity capped
// at 3 via subsampling), the boundary limit at infinite coordinates, and
// positivity. Violations are reported, never thrown.
GeneratorValidation validate_generator(const PointGenerator& g,
                                       const Grid& probe_grid);

struct RectProbDiagnostics {
  int clamp_count = 0;
};

// P(X1 in B1, ..., Xn in Bn) = prod_j P(Xj in Bj) * eta(B1 x ... x Bn),
// clamped to [0,1] with a diagnostic count when clamping occurs.
double rect_prob_from_generator(std::span<const Distribution> marginals,
                                const RectGenerator& g,
                                std::span<const Interval> rect,
                                RectProbDiagnostics* diag = nullptr);

}  // namespace maxmin
