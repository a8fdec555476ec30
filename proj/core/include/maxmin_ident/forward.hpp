#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxmin_ident/distribution.hpp"
#include "maxmin_ident/generator.hpp"
#include "maxmin_ident/grid.hpp"

namespace maxmin {

enum class Scheme { Maxima3, Minima3, MinMax3, ScaledMaxN, ScaledMinN };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Positive coefficient vectors (a, b) with the identifiability condition
// a_i : b_i != a_j : b_j. Ratios c_i = b_i / a_i are kept sorted ascending
// with the inducing component permutation.
class ScaleVectors {
 public:
  ScaleVectors(std::vector<double> a, std::vector<double> b);

  std::size_t size() const { return a_.size(); }
  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }
  // Sorted ratios 0 < c_0 < ... < c_{n-1}.
  std::span<const double> ratios() const { return ratios_; }
  // order()[k] is the component index whose ratio sits at sorted slot k.
  std::span<const std::size_t> order() const { return order_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> ratios_;
  std::vector<std::size_t> order_;
};

// Evaluable joint law of the observable pair (Y1,Y2): a closure over the
// components and the generator, never a precomputed table, so evaluation at
// +-infinity is exact. Interpretation depends on the scheme: joint CDF
// (maxima), joint survival (minima), or the rectangle probability
// P(Y1 > y1, Y2 <= y2) (min/max).
struct BivariateLaw {
  Scheme scheme;
  std::function<double(double, double)> eval;
  double operator()(double y1, double y2) const { return eval(y1, y2); }
};

// G(y1,y2) = F0(min(y1,y2)) F1(y1) F2(y2) eta1(min(y1,y2), y1, y2)
// for Y1 = max(X0,X1), Y2 = max(X0,X2). The generator is the coupling of the
// triple (X0,X1,X2), arity 3, evaluated with the first slot at min(y1,y2).
BivariateLaw joint_cdf_maxima(const Distribution& f0, const Distribution& f1,
                              const Distribution& f2, const PointGenerator& g);

// S(y1,y2) = S0(max(y1,y2)) S1(y1) S2(y2) eta1(max(y1,y2), y1, y2)
// for Y1 = min(X0,X1), Y2 = min(X0,X2).
BivariateLaw joint_survival_minima(const Distribution& f0,
                                   const Distribution& f1,
                                   const Distribution& f2,
                                   const PointGenerator& g);

struct MinMaxDiagnostics {
  int empty_rect_count = 0;
};

// P(Y1 > y1, Y2 <= y2) = [F0(y2) - F0(y1)] S1(y1) F2(y2) eta(B0 x B1 x B2)
// with B0 = (y1,y2], B1 = (y1,inf), B2 = (-inf,y2], for Y1 = min(X0,X1),
// Y2 = max(X0,X2). Empty rectangles (y1 >= y2) evaluate to 0.
double rect_prob_minmax(const Distribution& f0, const Distribution& f1,
                        const Distribution& f2, const RectGenerator& g,
                        double y1, double y2,
                        MinMaxDiagnostics* diag = nullptr);
BivariateLaw rect_prob_minmax_law(const Distribution& f0,
                                  const Distribution& f1,
                                  const Distribution& f2,
                                  const RectGenerator& g);

// G(t,s) = prod_i F_i(min(t/a_i, s/b_i)) * eta(min(t/a_i, s/b_i), i=1..n)
// for Y1 = max(a_i X_i), Y2 = max(b_i X_i).
BivariateLaw joint_cdf_scaled_maxima(std::span<const Distribution> fs,
                                     const ScaleVectors& sv,
                                     const PointGenerator& g);

// Survival mirror with max(t/a_i, s/b_i) for Y1 = min(a_i X_i),
// Y2 = min(b_i X_i).
BivariateLaw joint_survival_scaled_minima(std::span<const Distribution> fs,
                                          const ScaleVectors& sv,
                                          const PointGenerator& g);

// CDF of max(X0, Xi) for independent components: the product F0 * Fi,
// discretized on the working grid.
GridCdf marginal_of_max(const Distribution& f0, const Distribution& fi,
                        const Grid& grid);

// A coupling scheme together with everything needed to evaluate its law.
class JointExtremeLaw {
 public:
  static JointExtremeLaw maxima3(std::vector<Distribution> components,
                                 PointGenerator g);
  static JointExtremeLaw minima3(std::vector<Distribution> components,
                                 PointGenerator g);
  static JointExtremeLaw minmax3(std::vector<Distribution> components,
                                 RectGenerator g);
  static JointExtremeLaw scaled_max(std::vector<Distribution> components,
                                    ScaleVectors sv, PointGenerator g);
  static JointExtremeLaw scaled_min(std::vector<Distribution> components,
                                    ScaleVectors sv, PointGenerator g);

  Scheme scheme() const { return scheme_; }
  std::span<const Distribution> components() const { return components_; }
  const std::optional<ScaleVectors>& scales() const { return scales_; }
  const std::optional<PointGenerator>& point_generator() const {
    return point_gen_;
  }
  const std::optional<RectGenerator>& rect_generator() const {
    return rect_gen_;
  }
  BivariateLaw law() const;

 private:
  JointExtremeLaw() = default;
  Scheme scheme_ = Scheme::Maxima3;
  std::vector<Distribution> components_;
  std::optional<PointGenerator> point_gen_;
  std::optional<RectGenerator> rect_gen_;
  std::optional<ScaleVectors> scales_;
};

struct JointValidation {
  bool monotone = true;
  bool in_range = true;
  bool rect_positive = true;   // 2-increasing within tolerance
  bool corners_ok = true;      // limits at the scheme's corners
  bool frechet_ok = true;      // between the Frechet bounds of its margins
  std::vector<std::string> violations;
  bool pass() const {
    return monotone && in_range && rect_positive && corners_ok && frechet_ok;
  }
};

// Lattice checks of the evaluable law: monotonicity per argument, range,
// rectangle positivity within 1e-12, corner limits, Frechet envelope.
JointValidation validate_joint(const JointExtremeLaw& law, const Grid& probe);

}  // namespace maxmin
