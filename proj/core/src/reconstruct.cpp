#include "maxmin_ident/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace maxmin {

Anchor::Anchor(double x0_, double q_) : x0(x0_), q(q_) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("Anchor: q must be in (0,1)");
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("Anchor: x0 must be finite");
  }
}

namespace {

// Fill points that could not be recovered by monotone interpolation from
// recoverable neighbors (constant extension at the ends), then clamp to
// [0,1] and enforce monotonicity by running maximum. All adjustments are
// accounted in the report.
GridCdf assemble_cdf(const Grid& grid, std::vector<double> vals,
                     const std::vector<bool>& ok, ReconstructionReport& rep) {
  const std::size_t m = vals.size();
  std::size_t first_ok = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (ok[i]) {
      first_ok = i;
      break;
    }
  }
  if (first_ok == m) {
    throw UnrecoverableRegionError(
        "no grid point recoverable: denominators below the positivity floor "
        "everywhere");
  }
  for (std::size_t i = 0; i < first_ok; ++i) {
    vals[i] = vals[first_ok];
    ++rep.skipped_points;
  }
  std::size_t last_ok = first_ok;
  for (std::size_t i = first_ok + 1; i < m; ++i) {
    if (ok[i]) {
      if (i > last_ok + 1) {
        // interior gap: linear in y between the recovered neighbors
        const double y0 = grid[last_ok];
        const double y1 = grid[i];
        for (std::size_t k = last_ok + 1; k < i; ++k) {
          const double t = (grid[k] - y0) / (y1 - y0);
          vals[k] = vals[last_ok] + t * (vals[i] - vals[last_ok]);
          ++rep.skipped_points;
        }
      }
      last_ok = i;
    }
  }
  for (std::size_t i = last_ok + 1; i < m; ++i) {
    vals[i] = vals[last_ok];
    ++rep.skipped_points;
  }

  for (double& v : vals) {
    const double c = std::clamp(v, 0.0, 1.0);
    if (c != v) {
      ++rep.clip_count;
      rep.repair_mass += std::abs(c - v);
      v = c;
    }
  }
  double run = 0.0;
  for (double& v : vals) {
    if (v < run) {
      rep.repair_mass += run - v;
      v = run;
    }
    run = v;
  }
  return GridCdf(grid, std::move(vals));
}

}  // namespace

ReconstructionReport recover_from_maxima(const BivariateLaw& G,
                                         const PointGenerator& g,
                                         const Grid& grid) {
  if (g.arity() != 3 || g.kind() != GeneratorKind::MaxIndependent) {
    throw std::invalid_argument(
        "recover_from_maxima: need a max-independent generator of arity 3");
  }
  const std::size_t m = grid.size();
  std::vector<double> f0(m), f1(m), f2(m);
  std::vector<bool> ok0(m, false), ok1(m, false), ok2(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const double y = grid[i];
    const double den = G(y, y);
    if (!(den > kRecoveryFloor)) continue;
    const double a = G(y, kPlusInf);  // F0 F1
    const double b = G(kPlusInf, y);  // F0 F2
    const double v0 = a * b * g({y, y, y}) / den;
    f0[i] = v0;
    ok0[i] = true;
    if (v0 > kRecoveryFloor) {
      f1[i] = a / v0;
      f2[i] = b / v0;
      ok1[i] = ok2[i] = true;
    }
  }
  ReconstructionReport rep;
  rep.recovered.push_back(assemble_cdf(grid, std::move(f0), ok0, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f1), ok1, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f2), ok2, rep));
  return rep;
}

ReconstructionReport recover_from_minima(const BivariateLaw& S,
                                         const PointGenerator& g,
                                         const Grid& grid) {
  if (g.arity() != 3 || g.kind() != GeneratorKind::MinIndependent) {
    throw std::invalid_argument(
        "recover_from_minima: need a min-independent generator of arity 3");
  }
  const std::size_t m = grid.size();
  std::vector<double> f0(m), f1(m), f2(m);
  std::vector<bool> ok0(m, false), ok1(m, false), ok2(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const double y = grid[i];
    const double den = S(y, y);
    if (!(den > kRecoveryFloor)) continue;
    const double a = S(y, kMinusInf);  // S0 S1
    const double b = S(kMinusInf, y);  // S0 S2
    const double s0 = a * b * g({y, y, y}) / den;
    f0[i] = 1.0 - s0;
    ok0[i] = true;
    if (s0 > kRecoveryFloor) {
      f1[i] = 1.0 - a / s0;
      f2[i] = 1.0 - b / s0;
      ok1[i] = ok2[i] = true;
    }
  }
  ReconstructionReport rep;
  rep.recovered.push_back(assemble_cdf(grid, std::move(f0), ok0, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f1), ok1, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f2), ok2, rep));
  return rep;
}

ReconstructionReport recover_from_minmax(const BivariateLaw& R,
                                         const RectGenerator& g,
                                         const Anchor& anchor,
                                         const Grid& grid) {
  if (g.arity() != 3) {
    throw std::invalid_argument(
        "recover_from_minmax: generator arity must be 3");
  }
  constexpr double kSingular = 1e-9;
  const double x0 = anchor.x0;
  const double q = anchor.q;

  const auto A = [&R](double y) { return R(y, kPlusInf); };   // S0 S1
  const auto B = [&R](double y) { return R(kMinusInf, y); };  // F0 F2
  const double Bx0 = B(x0);
  const double Ax0 = A(x0);

  const std::size_t m = grid.size();
  std::vector<double> f0(m), f1(m), f2(m);
  std::vector<bool> ok0(m, false), ok1(m, false), ok2(m, false);
  ReconstructionReport rep;

  for (std::size_t i = 0; i < m; ++i) {
    const double y = grid[i];
    double v0;
    if (y <= x0) {
      const double Ay = A(y);
      const Interval rect[3] = {{y, x0}, {y, kPlusInf}, {kMinusInf, x0}};
      const double eta = g(std::span<const Interval>(rect, 3));
      const double den = eta * Bx0 * Ay;
      if (!(den > kRecoveryFloor)) continue;
      const double rho = R(y, x0) * q / den;
      if (std::abs(1.0 - rho) <= kSingular) {
        ++rep.skipped_points;
        continue;
      }
      v0 = (q - rho) / (1.0 - rho);
    } else {
      const double By = B(y);
      const Interval rect[3] = {{x0, y}, {x0, kPlusInf}, {kMinusInf, y}};
      const double eta = g(std::span<const Interval>(rect, 3));
      const double den = eta * Ax0 * By;
      if (!(den > kRecoveryFloor)) continue;
      const double rho = R(x0, y) * (1.0 - q) / den;
      if (std::abs(1.0 - rho) <= kSingular) {
        ++rep.skipped_points;
        continue;
      }
      v0 = q / (1.0 - rho);
    }
    f0[i] = v0;
    ok0[i] = true;
    const double s0 = 1.0 - v0;
    if (s0 > kRecoveryFloor) {
      f1[i] = 1.0 - A(y) / s0;
      ok1[i] = true;
    }
    if (v0 > kRecoveryFloor) {
      f2[i] = B(y) / v0;
      ok2[i] = true;
    }
  }
  rep.recovered.push_back(assemble_cdf(grid, std::move(f0), ok0, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f1), ok1, rep));
  rep.recovered.push_back(assemble_cdf(grid, std::move(f2), ok2, rep));
  return rep;
}

// ---------------------------------------------------------------------------
// Scaled-extremes recovery by ray telescoping.
//
// With eta divided out, log G(t,s) = sum_k log C_k(arg_k(t,s)) where C_k is
// the CDF (max kind) or survival (min kind) of the slot with the k-th
// smallest ratio c_k = b_k/a_k, and arg_k = min resp. max of (t/a_k, s/b_k).
// On a ray s = tau t with tau strictly between two consecutive ratios,
// exactly one not-yet-recovered slot depends on s; the functional equation
//   L(u) = d(u) + L(u * c_k/tau),  d computable from the law,
// walks that slot's log value to a boundary where it is known. Four variants
// cover the two kinds and the two half-lines:
//   max, t>0: slots descending, outward walk to +inf, seed log F = 0;
//   max, t<0: slots ascending, inward walk to 0-, seed log F(0) from t>0;
//   min, t<0: slots descending, outward walk to -inf, seed log S = 0;
//   min, t>0: slots ascending, inward walk to 0+, seed log S(0) from t<0
//             (identically 0 for positive supports).
// Each recovered slot is tabulated densely and peeled out of the law before
// the next one.
// ---------------------------------------------------------------------------

namespace {

constexpr int kTelescopeCap = 200;
constexpr double kStepTol = 1e-16;
constexpr std::size_t kGeomTablePoints = 8192;
constexpr std::size_t kUniformTablePoints = 24576;
constexpr std::size_t kMaxScaledComponents = 32;

// Log values of one component on one half-line. Interpolation is linear in
// log|x| on geometric axes (exact for power-law tails) and linear in x on
// uniform axes. Above the axis the value clamps to the last entry (the axis
// is built out to the telescoping stop point, where the value is
// negligible); below it, geometric axes extrapolate the boundary slope and
// uniform axes clamp.
struct LogTable {
  std::vector<double> x;     // ascending, single sign
  std::vector<double> logv;  // log F (max kind) or log S (min kind)
  bool log_axis = false;

  bool empty() const { return x.empty(); }

  double eval(double arg) const {
    if (arg >= x.back()) return logv.back();
    if (arg <= x.front()) {
      if (!log_axis) return logv.front();
      const double l0 = std::log(std::abs(x[0]));
      const double l1 = std::log(std::abs(x[1]));
      const double slope = (logv[1] - logv[0]) / (l1 - l0);
      return logv[0] + slope * (std::log(std::abs(arg)) - l0);
    }
    const auto it = std::upper_bound(x.begin(), x.end(), arg);
    const std::size_t j = static_cast<std::size_t>(it - x.begin());
    double t;
    if (log_axis) {
      const double lj0 = std::log(std::abs(x[j - 1]));
      const double lj1 = std::log(std::abs(x[j]));
      t = (std::log(std::abs(arg)) - lj0) / (lj1 - lj0);
    } else {
      t = (arg - x[j - 1]) / (x[j] - x[j - 1]);
    }
    return logv[j - 1] + t * (logv[j] - logv[j - 1]);
  }
};

struct RecoveredLog {
  LogTable pos;
  LogTable neg;
  double log_at_zero = 0.0;
  bool filled_pos = false;
  bool filled_neg = false;
  bool maxima = true;

  double eval(double arg) const {
    if (arg > 0.0) {
      if (filled_pos) return pos.eval(arg);
      // max kind: above every recovered negative point F <= ... unknown;
      // only sensible fallback is the boundary value
      return maxima ? log_at_zero : 0.0;
    }
    if (arg < 0.0) {
      if (filled_neg) return neg.eval(arg);
      // positive-support fallback: F(neg) = 0 (max), S(neg) = 1 (min)
      return maxima ? -std::numeric_limits<double>::infinity() : 0.0;
    }
    return log_at_zero;
  }
};

struct TelescopeResult {
  double value = 0.0;
  int steps = 0;
  bool ok = true;
};

class ScaledRecovery {
 public:
  ScaledRecovery(const BivariateLaw& law, const ScaleVectors& sv,
                 const PointGenerator& g, const Grid& grid, bool maxima)
      : law_(law), g_(g), grid_(grid), maxima_(maxima) {
    n_ = sv.size();
    if (n_ > kMaxScaledComponents) {
      throw std::invalid_argument("recover_scaled_extremes: too many components");
    }
    c_.assign(sv.ratios().begin(), sv.ratios().end());
    comp_.assign(sv.order().begin(), sv.order().end());
    a_.resize(n_);
    b_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      a_[k] = sv.a()[comp_[k]];
      b_[k] = sv.b()[comp_[k]];
    }
    rec_.resize(n_);
    for (auto& r : rec_) r.maxima = maxima_;

    double smax = 0.0, smin = kPlusInf;
    for (std::size_t k = 0; k < n_; ++k) {
      smax = std::max({smax, a_[k], b_[k]});
      smin = std::min({smin, a_[k], b_[k]});
    }
    span_ = smax / smin;
    margin_lo_ = 4.0 * span_ * (c_.back() / c_.front());
    margin_hi_ = 2.0 * span_;

    pos_scale_ = std::max({grid_.max(), std::abs(grid_.min()), 1.0});
    eps0_ = 1e-9 * pos_scale_;
    positive_support_grid_ = grid_.min() > 0.0;
  }

  ReconstructionReport run() {
    ReconstructionReport rep;
    const bool has_neg_grid = grid_.min() < 0.0;
    if (maxima_) {
      run_descending_outward(+1);  // always: supplies the t<0 seeds
      if (has_neg_grid) run_ascending_inward(-1);
    } else {
      const bool neg_needed = has_neg_grid || survival_at_zero_below_one();
      if (neg_needed) run_descending_outward(-1);
      if (grid_.max() > 0.0 || !neg_needed) run_ascending_inward(+1);
    }

    if (underflow_) {
      rep.notes.push_back(
          "law underflow during telescoping: affected points interpolated");
    }
    rep.iterations = max_steps_;
    rep.skipped_points += repaired_;

    const std::size_t m = grid_.size();
    rep.recovered.resize(n_, GridCdf(grid_, std::vector<double>(m, 0.0)));
    for (std::size_t k = 0; k < n_; ++k) {
      std::vector<double> vals(m);
      std::vector<bool> ok(m, true);
      for (std::size_t i = 0; i < m; ++i) {
        const double lg = rec_[k].eval(grid_[i]);
        double v = std::exp(lg);
        if (!maxima_) v = 1.0 - v;
        if (std::isnan(v)) {
          ok[i] = false;
          v = 0.0;
        }
        vals[i] = v;
      }
      rep.recovered[comp_[k]] = assemble_cdf(grid_, std::move(vals), ok, rep);
    }
    return rep;
  }

 private:
  double arg_of_slot(std::size_t k, double t, double s) const {
    const double ta = t / a_[k];
    const double sb = s / b_[k];
    return maxima_ ? std::min(ta, sb) : std::max(ta, sb);
  }

  // log of the law with eta divided out; -inf when the law is zero.
  double log_law_over_eta(double t, double s) const {
    const double v = law_(t, s);
    if (!(v > 0.0)) return kMinusInf;
    std::array<double, kMaxScaledComponents> args{};
    for (std::size_t k = 0; k < n_; ++k) args[k] = arg_of_slot(k, t, s);
    return std::log(v) - std::log(g_(std::span<const double>(args.data(), n_)));
  }

  double log_ghat(double t, double s, std::size_t slot, bool peel_above) const {
    double lg = log_law_over_eta(t, s);
    if (peel_above) {
      for (std::size_t j = slot + 1; j < n_; ++j) {
        lg -= rec_[j].eval(arg_of_slot(j, t, s));
      }
    } else {
      for (std::size_t j = 0; j < slot; ++j) {
        lg -= rec_[j].eval(arg_of_slot(j, t, s));
      }
    }
    return lg;
  }

  double log_marginal(double t, std::size_t slot, bool peel_above) const {
    return log_ghat(t, maxima_ ? kPlusInf : kMinusInf, slot, peel_above);
  }

  bool survival_at_zero_below_one() const {
    return law_(0.0, kMinusInf) < 1.0 - 1e-12;
  }

  // L(u) = d(u) + L(u * ratio): outward walks (|ratio| > 1) stop once the
  // increments die out; inward walks stop at |arg| < eps0 and add the seed.
  TelescopeResult telescope(double u0, double ratio, double seed,
                            const std::function<double(double)>& d) const {
    TelescopeResult out;
    double u = u0;
    double sum = 0.0;
    const bool outward = ratio > 1.0;
    int quiet = 0;
    for (int k = 0; k < kTelescopeCap; ++k) {
      if (!outward && std::abs(u) < eps0_) break;
      const double inc = d(u);
      ++out.steps;
      if (std::isnan(inc)) {
        out.ok = false;
        return out;
      }
      sum += inc;
      if (std::isinf(sum)) {  // genuine zero of the law: log C = -inf
        out.value = sum;
        return out;
      }
      u *= ratio;
      if (outward) {
        if (std::abs(inc) < kStepTol) {
          if (++quiet >= 2) break;
        } else {
          quiet = 0;
        }
      }
    }
    out.value = sum + seed;
    return out;
  }

  // Stop argument of an outward walk: where the increments die.
  double outward_reach(double u0, double ratio,
                       const std::function<double(double)>& d) const {
    double u = u0;
    int quiet = 0;
    for (int k = 0; k < kTelescopeCap; ++k) {
      const double inc = d(u);
      if (std::isnan(inc) || std::isinf(inc)) break;
      u *= ratio;
      if (std::abs(inc) < kStepTol) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    return u;
  }

  std::vector<double> make_axis(double lo, double hi, bool log_axis) const {
    const std::size_t count =
        log_axis ? kGeomTablePoints : kUniformTablePoints;
    std::vector<double> x(count);
    if (log_axis) {
      const bool negative = hi < 0.0;
      const double l0 = std::log(std::abs(negative ? hi : lo));
      const double l1 = std::log(std::abs(negative ? lo : hi));
      for (std::size_t i = 0; i < count; ++i) {
        const double t =
            static_cast<double>(i) / static_cast<double>(count - 1);
        const double mag = std::exp(l0 + t * (l1 - l0));
        x[i] = negative ? -mag : mag;
      }
      if (negative) std::reverse(x.begin(), x.end());
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        const double t =
            static_cast<double>(i) / static_cast<double>(count - 1);
        x[i] = lo + t * (hi - lo);
      }
    }
    x.front() = lo;
    x.back() = hi;
    return x;
  }

  // Interpolate NaN entries from valid neighbors, constant at the ends.
  void repair_table(LogTable& tb) {
    const std::size_t m = tb.logv.size();
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!std::isnan(tb.logv[i])) {
        first = i;
        break;
      }
    }
    if (first == m) {
      std::fill(tb.logv.begin(), tb.logv.end(), kMinusInf);
      repaired_ += static_cast<int>(m);
      return;
    }
    for (std::size_t i = 0; i < first; ++i) {
      tb.logv[i] = tb.logv[first];
      ++repaired_;
    }
    std::size_t last = first;
    for (std::size_t i = first + 1; i < m; ++i) {
      if (!std::isnan(tb.logv[i])) {
        if (i > last + 1) {
          const bool finite_ends =
              !std::isinf(tb.logv[last]) && !std::isinf(tb.logv[i]);
          for (std::size_t k = last + 1; k < i; ++k) {
            if (finite_ends) {
              const double t = static_cast<double>(k - last) /
                               static_cast<double>(i - last);
              tb.logv[k] = tb.logv[last] + t * (tb.logv[i] - tb.logv[last]);
            } else {
              tb.logv[k] = tb.logv[i];
            }
            ++repaired_;
          }
        }
        last = i;
      }
    }
    for (std::size_t i = last + 1; i < m; ++i) {
      tb.logv[i] = tb.logv[last];
      ++repaired_;
    }
  }

  // sign = +1: max kind on t>0. sign = -1: min kind on t<0.
  // Slots descend from the top ratio; each walk runs outward to the
  // infinity where the log value vanishes. The last slot comes straight
  // from the peeled marginal.
  void run_descending_outward(int sign) {
    const bool pos = sign > 0;
    const bool log_axis = positive_support_grid_ && pos;
    const double scale = pos ? pos_scale_
                             : (grid_.min() < 0.0 ? -grid_.min() : pos_scale_);
    const double lo_mag =
        log_axis ? grid_.min() / margin_lo_ : eps0_;
    const double base = sign * 2.0 * scale;

    for (std::size_t k = n_; k-- > 0;) {
      RecoveredLog& r = rec_[k];
      LogTable tb;
      tb.log_axis = log_axis;
      bool bad = false;
      if (k == 0) {
        // last remaining slot: nothing probes it later, keep the axis tight
        const double hi_mag = std::max(1.2 * scale, 10.0 * eps0_);
        tb.x = pos ? make_axis(lo_mag, hi_mag, log_axis)
                   : make_axis(-hi_mag, -lo_mag, log_axis);
        tb.logv.resize(tb.x.size());
        for (std::size_t i = 0; i < tb.x.size(); ++i) {
          tb.logv[i] = log_marginal(a_[0] * tb.x[i], 0, true);
        }
        r.log_at_zero = log_marginal(a_[0] * sign * eps0_, 0, true);
      } else {
        const double tau = 0.5 * (c_[k - 1] + c_[k]);
        const double ratio = c_[k] / tau;  // > 1: outward
        const auto d = [this, k, tau](double u) {
          const double t = u * b_[k] / tau;
          return log_ghat(t, u * b_[k], k, true) - log_marginal(t, k, true);
        };
        const double reach = outward_reach(base, ratio, d);
        tb.x = pos ? make_axis(lo_mag, std::max(reach, base), log_axis)
                   : make_axis(std::min(reach, base), -lo_mag, log_axis);
        tb.logv.resize(tb.x.size());
        for (std::size_t i = 0; i < tb.x.size(); ++i) {
          const auto res = telescope(tb.x[i], ratio, 0.0, d);
          tb.logv[i] = res.ok ? res.value : std::nan("");
          bad = bad || !res.ok;
          max_steps_ = std::max(max_steps_, res.steps);
        }
        const auto seed_res = telescope(sign * eps0_, ratio, 0.0, d);
        r.log_at_zero = seed_res.ok ? seed_res.value : 0.0;
      }
      if (bad) {
        underflow_ = true;
        repair_table(tb);
      }
      if (pos) {
        r.pos = std::move(tb);
        r.filled_pos = true;
      } else {
        r.neg = std::move(tb);
        r.filled_neg = true;
      }
    }
  }

  // sign = -1: max kind on t<0. sign = +1: min kind on t>0.
  // Slots ascend from the bottom ratio; each walk runs inward to 0 where
  // the seed carries the value over from the other half-line.
  void run_ascending_inward(int sign) {
    const bool pos = sign > 0;
    const bool log_axis = positive_support_grid_ && pos;
    const double scale = pos ? pos_scale_
                             : (grid_.min() < 0.0 ? -grid_.min() : pos_scale_);
    const double lo_mag = log_axis ? grid_.min() / margin_lo_ : eps0_;

    for (std::size_t k = 0; k < n_; ++k) {
      RecoveredLog& r = rec_[k];
      LogTable tb;
      tb.log_axis = log_axis;
      // the final slot feeds nothing downstream; tighten its axis
      const double hi_mag = k == n_ - 1
                                ? std::max(1.2 * scale, 10.0 * eps0_)
                                : scale * margin_hi_;
      tb.x = pos ? make_axis(lo_mag, hi_mag, log_axis)
                 : make_axis(-hi_mag, -lo_mag, log_axis);
      tb.logv.resize(tb.x.size());
      bool bad = false;
      if (k == n_ - 1) {
        for (std::size_t i = 0; i < tb.x.size(); ++i) {
          tb.logv[i] = log_marginal(a_[k] * tb.x[i], k, false);
        }
      } else {
        const double tau = 0.5 * (c_[k] + c_[k + 1]);
        const double ratio = c_[k] / tau;  // < 1: inward
        const auto d = [this, k, tau](double u) {
          const double t = u * b_[k] / tau;
          return log_ghat(t, u * b_[k], k, false) - log_marginal(t, k, false);
        };
        const double seed = r.log_at_zero;
        for (std::size_t i = 0; i < tb.x.size(); ++i) {
          const auto res = telescope(tb.x[i], ratio, seed, d);
          tb.logv[i] = res.ok ? res.value : std::nan("");
          bad = bad || !res.ok;
          max_steps_ = std::max(max_steps_, res.steps);
        }
      }
      if (bad) {
        underflow_ = true;
        repair_table(tb);
      }
      if (pos) {
        r.pos = std::move(tb);
        r.filled_pos = true;
      } else {
        r.neg = std::move(tb);
        r.filled_neg = true;
      }
    }
  }

  const BivariateLaw& law_;
  const PointGenerator& g_;
  const Grid& grid_;
  bool maxima_;
  std::size_t n_ = 0;
  std::vector<double> a_, b_, c_;
  std::vector<std::size_t> comp_;
  std::vector<RecoveredLog> rec_;
  double span_ = 1.0;
  double margin_lo_ = 1.0;
  double margin_hi_ = 1.0;
  double pos_scale_ = 1.0;
  double eps0_ = 1e-9;
  bool positive_support_grid_ = false;
  int max_steps_ = 0;
  bool underflow_ = false;
  int repaired_ = 0;
};

}  // namespace

ReconstructionReport recover_scaled_extremes(const BivariateLaw& law,
                                             const ScaleVectors& sv,
                                             const PointGenerator& g,
                                             const Grid& grid,
                                             ExtremeKind kind) {
  if (g.arity() != static_cast<int>(sv.size())) {
    throw std::invalid_argument(
        "recover_scaled_extremes: generator arity must match the number of "
        "components");
  }
  ScaledRecovery rec(law, sv, g, grid, kind == ExtremeKind::Max);
  return rec.run();
}

// ---------------------------------------------------------------------------

UniquenessVerdict check_uniqueness(const JointExtremeLaw& a,
                                   const JointExtremeLaw& b, const Grid& probe,
                                   double tol) {
  if (a.scheme() != b.scheme() ||
      a.components().size() != b.components().size()) {
    throw std::invalid_argument("check_uniqueness: scheme mismatch");
  }
  if (a.scales().has_value() != b.scales().has_value()) {
    throw std::invalid_argument("check_uniqueness: scheme mismatch");
  }
  if (a.scales().has_value()) {
    const auto ra = a.scales()->ratios();
    const auto rb = b.scales()->ratios();
    if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) {
      throw std::invalid_argument("check_uniqueness: scale vectors differ");
    }
  }

  const BivariateLaw la = a.law();
  const BivariateLaw lb = b.law();
  std::vector<double> pts(probe.points().begin(), probe.points().end());
  pts.insert(pts.begin(), kMinusInf);
  pts.push_back(kPlusInf);

  UniquenessVerdict v;
  v.tol = tol;
  for (double y1 : pts) {
    for (double y2 : pts) {
      v.joint_sup = std::max(v.joint_sup, std::abs(la(y1, y2) - lb(y1, y2)));
    }
  }
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    for (double y : probe.points()) {
      v.component_sup = std::max(
          v.component_sup,
          std::abs(a.components()[i].cdf(y) - b.components()[i].cdf(y)));
    }
  }
  v.joints_equal = v.joint_sup <= tol;
  v.components_equal = v.component_sup <= 10.0 * tol;
  v.contradiction = v.joints_equal && !v.components_equal;
  return v;
}

NonuniquenessDemo single_max_nonuniqueness_demo(const Distribution& f0,
                                                const Distribution& f1,
                                                const Grid& grid) {
  NonuniquenessDemo demo{marginal_of_max(f0, f1, grid)};
  double best_gap = 0.0;
  double best_y = grid.min();
  for (double y : grid.points()) {
    const double gap = std::abs(f0.cdf(y) - f1.cdf(y));
    if (gap > best_gap) {
      best_gap = gap;
      best_y = y;
    }
  }
  demo.degenerate = best_gap == 0.0;
  demo.witness_y = best_y;
  demo.witness_gap = best_gap;

  std::ostringstream os;
  os.precision(17);
  os << "marginal of Y1 = max(X0,X1): F_{Y1} = F0 * F1\n";
  os << "components: F0 = " << f0.to_literal() << ", F1 = " << f1.to_literal()
     << "\n";
  os << "swapped pair (F1,F0) yields the identical product CDF "
        "(multiplication commutes), so the marginal of Y1 alone cannot "
        "identify the pair.\n";
  if (demo.degenerate) {
    os << "degenerate: F0 = F1 at every grid point; the orderings coincide "
          "and no witness exists.\n";
  } else {
    os << "witness: y = " << best_y << " where |F0(y) - F1(y)| = " << best_gap
       << " yet both orderings give F_{Y1}(y) = "
       << f0.cdf(best_y) * f1.cdf(best_y) << "\n";
  }
  demo.text = os.str();
  return demo;
}

void compute_sup_errors(ReconstructionReport& report,
                        std::span<const Distribution> truth, double lo_q,
                        double hi_q) {
  report.sup_errors.assign(report.recovered.size(), 0.0);
  for (std::size_t i = 0; i < report.recovered.size() && i < truth.size();
       ++i) {
    const double lo = truth[i].quantile(lo_q);
    const double hi = truth[i].quantile(hi_q);
    double sup = 0.0;
    for (double y : report.recovered[i].grid().points()) {
      if (y < lo || y > hi) continue;
      sup = std::max(sup,
                     std::abs(report.recovered[i].eval(y) - truth[i].cdf(y)));
    }
    report.sup_errors[i] = sup;
  }
}

}  // namespace maxmin
