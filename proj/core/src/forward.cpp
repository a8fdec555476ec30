#include "maxmin_ident/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace maxmin {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Maxima3: return "maxima3";
    case Scheme::Minima3: return "minima3";
    case Scheme::MinMax3: return "minmax3";
    case Scheme::ScaledMaxN: return "scaled_max_n";
    case Scheme::ScaledMinN: return "scaled_min_n";
  }
  return "";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "maxima3") return Scheme::Maxima3;
  if (name == "minima3") return Scheme::Minima3;
  if (name == "minmax3") return Scheme::MinMax3;
  if (name == "scaled_max_n") return Scheme::ScaledMaxN;
  if (name == "scaled_min_n") return Scheme::ScaledMinN;
  throw std::invalid_argument("unknown scheme: " + name);
}

ScaleVectors::ScaleVectors(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw std::invalid_argument("ScaleVectors: need |a| = |b| >= 1");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] > 0.0) || !(b_[i] > 0.0) || !std::isfinite(a_[i]) ||
        !std::isfinite(b_[i])) {
      throw std::invalid_argument("ScaleVectors: entries must be positive");
    }
  }
  ratios_.resize(a_.size());
  order_.resize(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) ratios_[i] = b_[i] / a_[i];
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(),
            [this](std::size_t i, std::size_t j) { return ratios_[i] < ratios_[j]; });
  std::vector<double> sorted(a_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) sorted[k] = ratios_[order_[k]];
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!(sorted[k - 1] < sorted[k])) {
      throw std::invalid_argument(
          "ScaleVectors: ratio-distinctness violated (a_i:b_i must differ "
          "pairwise)");
    }
  }
  ratios_ = std::move(sorted);
}

namespace {

void require_point_gen(const PointGenerator& g, GeneratorKind kind, int arity) {
  if (g.kind() != kind || g.arity() != arity) {
    throw std::invalid_argument("generator kind/arity mismatch for scheme");
  }
}

}  // namespace

BivariateLaw joint_cdf_maxima(const Distribution& f0, const Distribution& f1,
                              const Distribution& f2, const PointGenerator& g) {
  require_point_gen(g, GeneratorKind::MaxIndependent, 3);
  return BivariateLaw{
      Scheme::Maxima3, [f0, f1, f2, g](double y1, double y2) {
        const double z = std::min(y1, y2);
        const double prod = f0.cdf(z) * f1.cdf(y1) * f2.cdf(y2);
        if (prod == 0.0) return 0.0;
        return prod * g({z, y1, y2});
      }};
}

BivariateLaw joint_survival_minima(const Distribution& f0,
                                   const Distribution& f1,
                                   const Distribution& f2,
                                   const PointGenerator& g) {
  require_point_gen(g, GeneratorKind::MinIndependent, 3);
  return BivariateLaw{
      Scheme::Minima3, [f0, f1, f2, g](double y1, double y2) {
        const double z = std::max(y1, y2);
        const double prod = f0.survival(z) * f1.survival(y1) * f2.survival(y2);
        if (prod == 0.0) return 0.0;
        return prod * g({z, y1, y2});
      }};
}

double rect_prob_minmax(const Distribution& f0, const Distribution& f1,
                        const Distribution& f2, const RectGenerator& g,
                        double y1, double y2, MinMaxDiagnostics* diag) {
  if (g.arity() != 3) {
    throw std::invalid_argument("rect_prob_minmax: generator arity must be 3");
  }
  if (y1 >= y2) {
    if (diag != nullptr) ++diag->empty_rect_count;
    return 0.0;
  }
  const Distribution marginals[3] = {f0, f1, f2};
  const Interval rect[3] = {{y1, y2}, {y1, kPlusInf}, {kMinusInf, y2}};
  return rect_prob_from_generator(std::span<const Distribution>(marginals, 3),
                                  g, std::span<const Interval>(rect, 3));
}

BivariateLaw rect_prob_minmax_law(const Distribution& f0,
                                  const Distribution& f1,
                                  const Distribution& f2,
                                  const RectGenerator& g) {
  if (g.arity() != 3) {
    throw std::invalid_argument("rect_prob_minmax: generator arity must be 3");
  }
  return BivariateLaw{Scheme::MinMax3, [f0, f1, f2, g](double y1, double y2) {
                        return rect_prob_minmax(f0, f1, f2, g, y1, y2);
                      }};
}

namespace {

BivariateLaw scaled_law(std::vector<Distribution> fs, const ScaleVectors& sv,
                        const PointGenerator& g, bool maxima) {
  if (fs.size() != sv.size()) {
    throw std::invalid_argument("scaled law: component/scale size mismatch");
  }
  require_point_gen(g,
                    maxima ? GeneratorKind::MaxIndependent
                           : GeneratorKind::MinIndependent,
                    static_cast<int>(fs.size()));
  std::vector<double> a(sv.a().begin(), sv.a().end());
  std::vector<double> b(sv.b().begin(), sv.b().end());
  return BivariateLaw{
      maxima ? Scheme::ScaledMaxN : Scheme::ScaledMinN,
      [fs = std::move(fs), a = std::move(a), b = std::move(b), g,
       maxima](double t, double s) {
        const std::size_t n = fs.size();
        std::vector<double> args(n);
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double ai = t / a[i];
          const double bi = s / b[i];
          args[i] = maxima ? std::min(ai, bi) : std::max(ai, bi);
          prod *= maxima ? fs[i].cdf(args[i]) : fs[i].survival(args[i]);
          if (prod == 0.0) return 0.0;
        }
        return prod * g(std::span<const double>(args));
      }};
}

}  // namespace

BivariateLaw joint_cdf_scaled_maxima(std::span<const Distribution> fs,
                                     const ScaleVectors& sv,
                                     const PointGenerator& g) {
  return scaled_law(std::vector<Distribution>(fs.begin(), fs.end()), sv, g,
                    true);
}

BivariateLaw joint_survival_scaled_minima(std::span<const Distribution> fs,
                                          const ScaleVectors& sv,
                                          const PointGenerator& g) {
  return scaled_law(std::vector<Distribution>(fs.begin(), fs.end()), sv, g,
                    false);
}

GridCdf marginal_of_max(const Distribution& f0, const Distribution& fi,
                        const Grid& grid) {
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f0.cdf(grid[i]) * fi.cdf(grid[i]);
  }
  return GridCdf(grid, std::move(vals));
}

JointExtremeLaw JointExtremeLaw::maxima3(std::vector<Distribution> components,
                                         PointGenerator g) {
  if (components.size() != 3) {
    throw std::invalid_argument("maxima3: exactly 3 components required");
  }
  require_point_gen(g, GeneratorKind::MaxIndependent, 3);
  JointExtremeLaw law;
  law.scheme_ = Scheme::Maxima3;
  law.components_ = std::move(components);
  law.point_gen_ = std::move(g);
  return law;
}

JointExtremeLaw JointExtremeLaw::minima3(std::vector<Distribution> components,
                                         PointGenerator g) {
  if (components.size() != 3) {
    throw std::invalid_argument("minima3: exactly 3 components required");
  }
  require_point_gen(g, GeneratorKind::MinIndependent, 3);
  JointExtremeLaw law;
  law.scheme_ = Scheme::Minima3;
  law.components_ = std::move(components);
  law.point_gen_ = std::move(g);
  return law;
}

JointExtremeLaw JointExtremeLaw::minmax3(std::vector<Distribution> components,
                                         RectGenerator g) {
  if (components.size() != 3) {
    throw std::invalid_argument("minmax3: exactly 3 components required");
  }
  if (g.arity() != 3) {
    throw std::invalid_argument("minmax3: generator arity must be 3");
  }
  JointExtremeLaw law;
  law.scheme_ = Scheme::MinMax3;
  law.components_ = std::move(components);
  law.rect_gen_ = std::move(g);
  return law;
}

JointExtremeLaw JointExtremeLaw::scaled_max(std::vector<Distribution> components,
                                            ScaleVectors sv, PointGenerator g) {
  if (components.size() != sv.size()) {
    throw std::invalid_argument("scaled_max: component/scale size mismatch");
  }
  require_point_gen(g, GeneratorKind::MaxIndependent,
                    static_cast<int>(components.size()));
  JointExtremeLaw law;
  law.scheme_ = Scheme::ScaledMaxN;
  law.components_ = std::move(components);
  law.point_gen_ = std::move(g);
  law.scales_ = std::move(sv);
  return law;
}

JointExtremeLaw JointExtremeLaw::scaled_min(std::vector<Distribution> components,
                                            ScaleVectors sv, PointGenerator g) {
  if (components.size() != sv.size()) {
    throw std::invalid_argument("scaled_min: component/scale size mismatch");
  }
  require_point_gen(g, GeneratorKind::MinIndependent,
                    static_cast<int>(components.size()));
  JointExtremeLaw law;
  law.scheme_ = Scheme::ScaledMinN;
  law.components_ = std::move(components);
  law.point_gen_ = std::move(g);
  law.scales_ = std::move(sv);
  return law;
}

BivariateLaw JointExtremeLaw::law() const {
  switch (scheme_) {
    case Scheme::Maxima3:
      return joint_cdf_maxima(components_[0], components_[1], components_[2],
                              *point_gen_);
    case Scheme::Minima3:
      return joint_survival_minima(components_[0], components_[1],
                                   components_[2], *point_gen_);
    case Scheme::MinMax3:
      return rect_prob_minmax_law(components_[0], components_[1],
                                  components_[2], *rect_gen_);
    case Scheme::ScaledMaxN:
      return joint_cdf_scaled_maxima(components_, *scales_, *point_gen_);
    case Scheme::ScaledMinN:
      return joint_survival_scaled_minima(components_, *scales_, *point_gen_);
  }
  throw std::logic_error("unreachable");
}

JointValidation validate_joint(const JointExtremeLaw& jlaw, const Grid& probe) {
  constexpr double kTol = 1e-12;
  JointValidation rep;
  const BivariateLaw law = jlaw.law();
  const Scheme sc = jlaw.scheme();

  const bool cdf_like = sc == Scheme::Maxima3 || sc == Scheme::ScaledMaxN;
  const bool surv_like = sc == Scheme::Minima3 || sc == Scheme::ScaledMinN;

  const std::size_t m = probe.size();
  std::vector<double> vals(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      vals[i * m + j] = law(probe[i], probe[j]);
    }
  }

  for (double v : vals) {
    if (!(v >= -kTol && v <= 1.0 + kTol)) {
      rep.in_range = false;
      rep.violations.push_back("value outside [0,1]");
      break;
    }
  }

  // Monotonicity per argument. For the rectangle scheme: nonincreasing in
  // y1, nondecreasing in y2; CDF schemes nondecreasing in both; survival
  // schemes nonincreasing in both.
  const double dir1 = (cdf_like) ? 1.0 : -1.0;
  const double dir2 = (cdf_like || sc == Scheme::MinMax3) ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < m && rep.monotone; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (dir1 * (vals[(i + 1) * m + j] - vals[i * m + j]) < -kTol) {
        rep.monotone = false;
        rep.violations.push_back("monotonicity violated in first argument");
        break;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < m && rep.monotone; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dir2 * (vals[i * m + j + 1] - vals[i * m + j]) < -kTol) {
        rep.monotone = false;
        rep.violations.push_back("monotonicity violated in second argument");
        break;
      }
    }
  }

  // Rectangle positivity (2-increasing up to sign conventions).
  for (std::size_t i = 0; i + 1 < m && rep.rect_positive; ++i) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const double a = vals[i * m + j];
      const double b = vals[i * m + j + 1];
      const double c = vals[(i + 1) * m + j];
      const double d = vals[(i + 1) * m + j + 1];
      double mass = 0.0;
      if (cdf_like || surv_like) {
        mass = d - b - c + a;  // same form for survival rectangles
      } else {
        mass = b - d - a + c;  // R(x,y') - R(x',y') - R(x,y) + R(x',y)
      }
      if (mass < -kTol) {
        rep.rect_positive = false;
        rep.violations.push_back("rectangle positivity violated");
        break;
      }
    }
  }

  // Corner limits.
  const auto near1 = [](double v) { return std::abs(v - 1.0) <= kTol; };
  const auto near0 = [](double v) { return std::abs(v) <= kTol; };
  if (cdf_like) {
    if (!near1(law(kPlusInf, kPlusInf)) || !near0(law(kMinusInf, probe[0])) ||
        !near0(law(probe[0], kMinusInf))) {
      rep.corners_ok = false;
    }
  } else if (surv_like) {
    if (!near1(law(kMinusInf, kMinusInf)) || !near0(law(kPlusInf, probe[0])) ||
        !near0(law(probe[0], kPlusInf))) {
      rep.corners_ok = false;
    }
  } else {
    if (!near1(law(kMinusInf, kPlusInf)) || !near0(law(kPlusInf, probe[0])) ||
        !near0(law(probe[0], kMinusInf))) {
      rep.corners_ok = false;
    }
  }
  if (!rep.corners_ok) rep.violations.push_back("corner limits violated");

  // Frechet envelope against the law's own margins.
  for (std::size_t i = 0; i < m && rep.frechet_ok; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double m1, m2;
      if (cdf_like) {
        m1 = law(probe[i], kPlusInf);
        m2 = law(kPlusInf, probe[j]);
      } else if (surv_like) {
        m1 = law(probe[i], kMinusInf);
        m2 = law(kMinusInf, probe[j]);
      } else {
        m1 = law(probe[i], kPlusInf);   // P(Y1 > y1)
        m2 = law(kMinusInf, probe[j]);  // P(Y2 <= y2)
      }
      const double v = vals[i * m + j];
      if (v > std::min(m1, m2) + kTol ||
          v < std::max(m1 + m2 - 1.0, 0.0) - kTol) {
        rep.frechet_ok = false;
        rep.violations.push_back("Frechet bounds violated");
        break;
      }
    }
  }
  return rep;
}

}  // namespace maxmin
