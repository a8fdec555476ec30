#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxmin_ident/forward.hpp"
#include "maxmin_ident/grid_cdf.hpp"

namespace maxmin {

// Denominator floor for the recovery divisions. Grid points whose
// denominators fall below it carry no information and are filled by
// monotone interpolation from recoverable neighbors.
inline constexpr double kRecoveryFloor = 1e-12;

// Raised when no grid point is recoverable at all.
class UnrecoverableRegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Known point of the shared component: F0(x0) = q. Required by the min/max
// scheme, where the joint law pins F0 only up to this one degree of freedom.
struct Anchor {
  double x0 = 0.0;
  double q = 0.5;
  Anchor() = default;
  Anchor(double x0_, double q_);
};

struct ReconstructionReport {
  std::vector<GridCdf> recovered;
  // Per-component sup-norm error vs truth; filled by compute_sup_errors.
  std::vector<double> sup_errors;
  int clip_count = 0;        // values clipped into [0,1]
  int skipped_points = 0;    // below-floor / singular points, interpolated
  int iterations = 0;        // max telescoping depth (scaled schemes)
  double repair_mass = 0.0;  // total monotone-repair adjustment
  std::vector<std::string> notes;
};

// Theorem-by-theorem inverse operators. Each one implements the constructive
// algebra of the corresponding uniqueness proof, with the generator given.

// From the joint CDF of (max(X0,X1), max(X0,X2)):
//   F0(y) = G(y,inf) G(inf,y) eta(y,y,y) / G(y,y),
//   F1 = G(y,inf)/F0, F2 = G(inf,y)/F0.
ReconstructionReport recover_from_maxima(const BivariateLaw& G,
                                         const PointGenerator& g,
                                         const Grid& grid);

// Survival mirror from the joint survival of (min(X0,X1), min(X0,X2)).
ReconstructionReport recover_from_minima(const BivariateLaw& S,
                                         const PointGenerator& g,
                                         const Grid& grid);

// From the rectangle probability R(y1,y2) = P(Y1>y1, Y2<=y2) of
// (min(X0,X1), max(X0,X2)), with the anchor F0(x0) = q:
// below the anchor rho(y) = R(y,x0) q / (eta * B(x0) * A(y)) gives
// F0(y) = (q - rho)/(1 - rho); above it the mirrored identity through
// R(x0,y) gives F0(y) = q/(1 - rho'). Then S1 = A/S0 and F2 = B/F0.
ReconstructionReport recover_from_minmax(const BivariateLaw& R,
                                         const RectGenerator& g,
                                         const Anchor& anchor,
                                         const Grid& grid);

enum class ExtremeKind { Max, Min };

// Ray-telescoping recovery for the scaled schemes: with eta divided out,
// log G(t,s) = sum_i log F_i(min(t/a_i, s/b_i)). Rays s = tau t between
// consecutive ratio thresholds isolate one component at a time; the
// recursion walks each component's log-CDF to a boundary with known value
// (0 at the relevant infinity, or the value at 0 carried over from the
// other half-line) and the component is then peeled out.
ReconstructionReport recover_scaled_extremes(const BivariateLaw& law,
                                             const ScaleVectors& sv,
                                             const PointGenerator& g,
                                             const Grid& grid,
                                             ExtremeKind kind);

struct UniquenessVerdict {
  double joint_sup = 0.0;      // sup |lawA - lawB| over the probe lattice
  double component_sup = 0.0;  // max over components of sup |F_i - F_i*|
  bool joints_equal = false;
  bool components_equal = false;
  // Joint laws equal within tol but some component pair differs by more
  // than 10 tol: the case the theorems rule out.
  bool contradiction = false;
  double tol = 0.0;
};

UniquenessVerdict check_uniqueness(const JointExtremeLaw& a,
                                   const JointExtremeLaw& b, const Grid& probe,
                                   double tol);

// Why the marginal of Y1 = max(X0,X1) alone cannot identify (F0,F1): both
// orderings produce the identical product CDF. A witness grid point where
// the components differ shows the lost information.
struct NonuniquenessDemo {
  GridCdf product;  // F0*F1 == F1*F0 on the grid, exactly
  bool degenerate = false;          // f0 == f1 on every grid point
  double witness_y = 0.0;           // valid when !degenerate
  double witness_gap = 0.0;         // |F0 - F1| at the witness
  std::string text;                 // human-readable block
};

NonuniquenessDemo single_max_nonuniqueness_demo(const Distribution& f0,
                                                const Distribution& f1,
                                                const Grid& grid);

// Per-component sup |recovered - truth| over grid points inside the truth's
// central quantile range [lo_q, hi_q]; fills report.sup_errors.
void compute_sup_errors(ReconstructionReport& report,
                        std::span<const Distribution> truth, double lo_q,
                        double hi_q);

}  // namespace maxmin
