#include "maxmin_ident/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace maxmin {

PointGenerator::PointGenerator(int arity, GeneratorKind kind, EvalFn eval,
                               std::string name)
    : arity_(arity), kind_(kind), eval_(std::move(eval)), name_(std::move(name)) {
  if (arity_ < 1) throw std::invalid_argument("PointGenerator: arity < 1");
  if (!eval_) throw std::invalid_argument("PointGenerator: empty eval");
}

double PointGenerator::operator()(std::span<const double> xs) const {
  if (static_cast<int>(xs.size()) != arity_) {
    throw std::invalid_argument("PointGenerator: arity mismatch for '" +
                                name_ + "'");
  }
  return eval_(xs);
}

RectGenerator::RectGenerator(int arity, EvalFn eval, std::string name)
    : arity_(arity), eval_(std::move(eval)), name_(std::move(name)) {
  if (arity_ < 1) throw std::invalid_argument("RectGenerator: arity < 1");
  if (!eval_) throw std::invalid_argument("RectGenerator: empty eval");
}

double RectGenerator::operator()(std::span<const Interval> rect) const {
  if (static_cast<int>(rect.size()) != arity_) {
    throw std::invalid_argument("RectGenerator: arity mismatch for '" + name_ +
                                "'");
  }
  return eval_(rect);
}

PointGenerator independent_generator(int n, GeneratorKind kind) {
  return PointGenerator(
      n, kind, [](std::span<const double>) { return 1.0; }, "independent");
}

RectGenerator independent_rect_generator(int n) {
  return RectGenerator(
      n, [](std::span<const Interval>) { return 1.0; }, "independent");
}

PointGenerator shared_component_generator(const Distribution& f0) {
  return PointGenerator(
      2, GeneratorKind::MaxIndependent,
      [f0](std::span<const double> xs) {
        if (xs[0] == kPlusInf || xs[1] == kPlusInf) return 1.0;
        const double c1 = f0.cdf(xs[0]);
        const double c2 = f0.cdf(xs[1]);
        const double denom = c1 * c2;
        if (denom <= kGeneratorFloor) {
          throw std::domain_error(
              "shared_component generator: denominator below positivity floor");
        }
        return std::min(c1, c2) / denom;  // F0(min(y1,y2)) = min(F0(y1),F0(y2))
      },
      "shared_component(" + f0.to_literal() + ")");
}

PointGenerator shared_component_min_generator(const Distribution& f0) {
  return PointGenerator(
      2, GeneratorKind::MinIndependent,
      [f0](std::span<const double> xs) {
        if (xs[0] == kMinusInf || xs[1] == kMinusInf) return 1.0;
        const double s1 = f0.survival(xs[0]);
        const double s2 = f0.survival(xs[1]);
        const double denom = s1 * s2;
        if (denom <= kGeneratorFloor) {
          throw std::domain_error(
              "shared_component min generator: denominator below positivity "
              "floor");
        }
        return std::min(s1, s2) / denom;  // S0(max(y1,y2)) = min(S0(y1),S0(y2))
      },
      "shared_component_min(" + f0.to_literal() + ")");
}

PointGenerator shared_component_generator3(const Distribution& f0) {
  return PointGenerator(
      3, GeneratorKind::MaxIndependent,
      [f0](std::span<const double> xs) {
        if (xs[0] == kPlusInf && xs[1] == kPlusInf && xs[2] == kPlusInf) {
          return 1.0;
        }
        const double z = f0.cdf(xs[0]);
        const double c1 = f0.cdf(xs[1]);
        const double c2 = f0.cdf(xs[2]);
        const double denom = c1 * c2;
        if (denom <= kGeneratorFloor) {
          throw std::domain_error(
              "shared_component generator: denominator below positivity floor");
        }
        return z / denom;
      },
      "shared_component3(" + f0.to_literal() + ")");
}

PointGenerator shared_component_min_generator3(const Distribution& f0) {
  return PointGenerator(
      3, GeneratorKind::MinIndependent,
      [f0](std::span<const double> xs) {
        if (xs[0] == kMinusInf && xs[1] == kMinusInf && xs[2] == kMinusInf) {
          return 1.0;
        }
        const double z = f0.survival(xs[0]);
        const double s1 = f0.survival(xs[1]);
        const double s2 = f0.survival(xs[2]);
        const double denom = s1 * s2;
        if (denom <= kGeneratorFloor) {
          throw std::domain_error(
              "shared_component min generator: denominator below positivity "
              "floor");
        }
        return z / denom;
      },
      "shared_component_min3(" + f0.to_literal() + ")");
}

RectGenerator lift_to_rect(const PointGenerator& g) {
  const int n = g.arity();
  return RectGenerator(
      n,
      [g, n](std::span<const Interval> rect) {
        for (const auto& side : rect) {
          if (side.full_line()) return 1.0;
        }
        std::vector<double> corner(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) corner[static_cast<std::size_t>(i)] = rect[static_cast<std::size_t>(i)].hi;
        return g(std::span<const double>(corner));
      },
      "lift(" + g.name() + ")");
}

PointGenerator tabulated_generator(const Grid& axis,
                                   std::vector<std::vector<double>> values,
                                   GeneratorKind kind) {
  const std::size_t m = axis.size();
  if (values.size() != m) {
    throw std::invalid_argument("tabulated_generator: row count != axis size");
  }
  for (const auto& row : values) {
    if (row.size() != m) {
      throw std::invalid_argument(
          "tabulated_generator: column count != axis size");
    }
    for (double v : row) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(
            "tabulated_generator: values must be finite and positive");
      }
    }
  }
  auto table = std::make_shared<std::vector<std::vector<double>>>(std::move(values));
  return PointGenerator(
      2, kind,
      [axis, table, kind](std::span<const double> xs) {
        const double boundary =
            kind == GeneratorKind::MaxIndependent ? kPlusInf : kMinusInf;
        if (xs[0] == boundary || xs[1] == boundary) return 1.0;
        const auto locate = [&axis](double x) {
          const std::size_t i = axis.segment(x);
          const double x0 = axis[i];
          const double x1 = axis[i + 1];
          double t = (x - x0) / (x1 - x0);
          t = std::clamp(t, 0.0, 1.0);  // nearest-value clamp outside
          return std::pair<std::size_t, double>(i, t);
        };
        const auto [i, s] = locate(xs[0]);
        const auto [j, t] = locate(xs[1]);
        const auto& v = *table;
        return (1 - s) * ((1 - t) * v[i][j] + t * v[i][j + 1]) +
               s * ((1 - t) * v[i + 1][j] + t * v[i + 1][j + 1]);
      },
      "tabulated");
}

PointGenerator tabulated_generator_from_csv(const std::string& path,
                                            GeneratorKind kind) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("tabulated_generator: cannot open " + path);
  }
  const auto parse_row = [](const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      out.push_back(std::stod(cell));
    }
    return out;
  };
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("tabulated_generator: empty file " + path);
  }
  Grid axis(parse_row(line));
  std::vector<std::vector<double>> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    values.push_back(parse_row(line));
  }
  return tabulated_generator(axis, std::move(values), kind);
}

GeneratorValidation validate_generator(const PointGenerator& g,
                                       const Grid& probe_grid) {
  GeneratorValidation report;

  // Subsample the axis so the lattice stays small at higher arity.
  std::vector<double> axis;
  const std::size_t cap = g.arity() >= 3 ? 12 : 64;
  const std::size_t m = probe_grid.size();
  if (m <= cap) {
    axis.assign(probe_grid.points().begin(), probe_grid.points().end());
  } else {
    for (std::size_t k = 0; k < cap; ++k) {
      axis.push_back(probe_grid[(k * (m - 1)) / (cap - 1)]);
    }
  }

  const double boundary =
      g.kind() == GeneratorKind::MaxIndependent ? kPlusInf : kMinusInf;
  const std::size_t arity = static_cast<std::size_t>(g.arity());
  std::vector<double> point(arity);
  double lo = kPlusInf;
  double hi = kMinusInf;
  bool positive = true;
  bool limit_ok = true;
  bool domain_errors = false;

  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= axis.size();

  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t i = 0; i < arity; ++i) {
      point[i] = axis[rem % axis.size()];
      rem /= axis.size();
    }
    double v;
    try {
      v = g(std::span<const double>(point));
    } catch (const std::domain_error&) {
      domain_errors = true;
      continue;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (!(v > 0.0)) positive = false;

    // Limit check: each coordinate at the kind's infinity must give 1.
    for (std::size_t i = 0; i < arity && limit_ok; ++i) {
      const double saved = point[i];
      point[i] = boundary;
      try {
        if (g(std::span<const double>(point)) != 1.0) limit_ok = false;
      } catch (const std::domain_error&) {
        limit_ok = false;
      }
      point[i] = saved;
    }
  }
  // All-infinite corner must be exactly 1 as well.
  std::fill(point.begin(), point.end(), boundary);
  try {
    if (g(std::span<const double>(point)) != 1.0) limit_ok = false;
  } catch (const std::domain_error&) {
    limit_ok = false;
  }

  if (domain_errors) report.violations.push_back("domain error at probe points");
  if (!positive) report.violations.push_back("positivity violated");
  if (!limit_ok) report.violations.push_back("boundary limit violated");
  report.min_value = lo;
  report.max_value = hi;
  report.positive = positive;
  report.limit_ok = limit_ok;
  return report;
}

double rect_prob_from_generator(std::span<const Distribution> marginals,
                                const RectGenerator& g,
                                std::span<const Interval> rect,
                                RectProbDiagnostics* diag) {
  if (marginals.size() != rect.size() ||
      static_cast<int>(rect.size()) != g.arity()) {
    throw std::invalid_argument("rect_prob_from_generator: arity mismatch");
  }
  double prod = 1.0;
  for (std::size_t j = 0; j < marginals.size(); ++j) {
    const double p = marginals[j].cdf(rect[j].hi) - marginals[j].cdf(rect[j].lo);
    if (p <= 0.0) return 0.0;  // empty or null side: no eta evaluation needed
    prod *= p;
  }
  double v = prod * g(rect);
  if (v < 0.0 || v > 1.0) {
    if (diag != nullptr) ++diag->clamp_count;
    v = std::clamp(v, 0.0, 1.0);
  }
  return v;
}

}  // namespace maxmin
