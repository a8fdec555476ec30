#include "maxmin_ident/distribution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "maxmin_ident/extended_real.hpp"

namespace maxmin {

namespace {
std::string format_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

ParametricDist::ParametricDist(Family f, double p0, double p1)
    : family_(f), p0_(p0), p1_(p1) {}

ParametricDist ParametricDist::uniform(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("uniform: need lo < hi");
  return ParametricDist(Family::Uniform, lo, hi);
}

ParametricDist ParametricDist::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: need rate > 0");
  return ParametricDist(Family::Exponential, rate, 0.0);
}

ParametricDist ParametricDist::weibull(double shape, double scale) {
  if (!(shape > 0.0 && scale > 0.0)) {
    throw std::invalid_argument("weibull: need shape, scale > 0");
  }
  return ParametricDist(Family::Weibull, shape, scale);
}

ParametricDist ParametricDist::gumbel(double location, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("gumbel: need scale > 0");
  return ParametricDist(Family::Gumbel, location, scale);
}

double ParametricDist::cdf(double x) const {
  switch (family_) {
    case Family::Uniform:
      if (x <= p0_) return 0.0;
      if (x >= p1_) return 1.0;
      return (x - p0_) / (p1_ - p0_);
    case Family::Exponential:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-p0_ * x);  // 1 - e^{-rate x}
    case Family::Weibull:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-std::pow(x / p1_, p0_));
    case Family::Gumbel:
      // exp(-exp(-(x-mu)/beta)); strictly positive for every finite x
      return std::exp(-std::exp(-(x - p0_) / p1_));
  }
  return 0.0;
}

double ParametricDist::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("quantile: u must be in (0,1)");
  }
  switch (family_) {
    case Family::Uniform:
      return p0_ + u * (p1_ - p0_);
    case Family::Exponential:
      return -std::log1p(-u) / p0_;
    case Family::Weibull:
      return p1_ * std::pow(-std::log1p(-u), 1.0 / p0_);
    case Family::Gumbel:
      return p0_ - p1_ * std::log(-std::log(u));
  }
  return 0.0;
}

std::string ParametricDist::to_literal() const {
  switch (family_) {
    case Family::Uniform:
      return "uniform(" + format_param(p0_) + "," + format_param(p1_) + ")";
    case Family::Exponential:
      return "exponential(" + format_param(p0_) + ")";
    case Family::Weibull:
      return "weibull(" + format_param(p0_) + "," + format_param(p1_) + ")";
    case Family::Gumbel:
      return "gumbel(" + format_param(p0_) + "," + format_param(p1_) + ")";
  }
  return "";
}

double Distribution::cdf(double x) const {
  if (const auto* p = as_parametric()) {
    if (x == kMinusInf) return 0.0;
    if (x == kPlusInf) return 1.0;
    return p->cdf(x);
  }
  return as_grid()->eval(x);
}

double Distribution::quantile(double u) const {
  if (const auto* p = as_parametric()) return p->quantile(u);
  return as_grid()->quantile(u);
}

GridCdf Distribution::discretize(const Grid& g) const {
  std::vector<double> vals(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) vals[i] = cdf(g[i]);
  return GridCdf(g, std::move(vals));
}

std::string Distribution::to_literal() const {
  if (const auto* p = as_parametric()) return p->to_literal();
  return "gridcdf";
}

}  // namespace maxmin
