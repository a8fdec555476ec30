#pragma once

#include <string>
#include <variant>

#include "maxmin_ident/grid_cdf.hpp"
#include "maxmin_ident/rng.hpp"

namespace maxmin {

enum class Family { Uniform, Exponential, Weibull, Gumbel };

// Closed-form univariate laws used as test fixtures and experiment inputs.
class ParametricDist {
 public:
  static ParametricDist uniform(double lo, double hi);
  static ParametricDist exponential(double rate);
  static ParametricDist weibull(double shape, double scale);
  static ParametricDist gumbel(double location, double scale);

  double cdf(double x) const;
  double quantile(double u) const;

  Family family() const { return family_; }
  double param0() const { return p0_; }
  double param1() const { return p1_; }
  std::string to_literal() const;  // "family(p0,p1)" form used by configs

 private:
  ParametricDist(Family f, double p0, double p1);
  Family family_;
  double p0_;
  double p1_;
};

// Univariate law: either a parametric family or a grid CDF. Immutable;
// evaluation is pure and safe to call concurrently.
class Distribution {
 public:
  Distribution(ParametricDist d) : impl_(std::move(d)) {}  // NOLINT(google-explicit-constructor)
  Distribution(GridCdf g) : impl_(std::move(g)) {}         // NOLINT(google-explicit-constructor)

  // F(x); exact at +-infinity (0 and 1 for parametric laws, tail semantics
  // for grid CDFs).
  double cdf(double x) const;

  // Always the exact complement 1 - cdf(x).
  double survival(double x) const { return 1.0 - cdf(x); }

  // Generalized inverse; flat regions resolve to their left endpoint.
  double quantile(double u) const;

  // Inverse-transform draw; deterministic for a fixed rng state.
  double sample(SplitMix64& rng) const { return quantile(rng.next_unit()); }

  GridCdf discretize(const Grid& g) const;

  bool is_grid() const { return std::holds_alternative<GridCdf>(impl_); }
  const GridCdf* as_grid() const { return std::get_if<GridCdf>(&impl_); }
  const ParametricDist* as_parametric() const {
    return std::get_if<ParametricDist>(&impl_);
  }
  std::string to_literal() const;

 private:
  std::variant<ParametricDist, GridCdf> impl_;
};

}  // namespace maxmin
