#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxmin_ident/forward.hpp"
#include "maxmin_ident/reconstruct.hpp"

namespace maxmin {

// Plug-in error budgets are flagged vacuous once the amplified DKW
// half-width reaches 1: the reconstruction divisions can then produce
// anything.
inline constexpr double kDivisionAmplification = 5.0;

struct SampleBatch {
  std::vector<std::pair<double, double>> pairs;  // (y1, y2)
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::Maxima3;
};

enum class EmpiricalMode { Cdf, Survival, Rectangle };

// Step-function plug-in estimate of the joint law: orthant or rectangle
// proportions of the batch. Marginal slices (one coordinate infinite) use
// sorted copies and binary search.
class EmpiricalJointLaw {
 public:
  EmpiricalJointLaw(SampleBatch batch, EmpiricalMode mode);

  double eval(double y1, double y2) const;
  BivariateLaw as_law() const;

  const SampleBatch& batch() const { return batch_; }
  EmpiricalMode mode() const { return mode_; }
  std::size_t size() const { return batch_.pairs.size(); }

 private:
  SampleBatch batch_;
  EmpiricalMode mode_;
  std::vector<double> sorted_y1_;
  std::vector<double> sorted_y2_;
};

// Draws of (Y1,Y2) for the shared-component construction: independent
// (X0,X1,X2) combined per scheme. Each draw uses its own counter-derived
// substream, so batches are reproducible and order-independent.
SampleBatch sample_shared_component(const Distribution& f0,
                                    const Distribution& f1,
                                    const Distribution& f2, std::size_t n,
                                    std::uint64_t seed, Scheme scheme);

// Draws of (max_i a_i X_i, max_i b_i X_i) for independent components
// (scheme ScaledMaxN) or the min mirror (ScaledMinN).
SampleBatch sample_scaled_extremes(std::span<const Distribution> fs,
                                   const ScaleVectors& sv, std::size_t n,
                                   std::uint64_t seed, Scheme scheme);

EmpiricalJointLaw empirical_law(SampleBatch batch, EmpiricalMode mode);

// Dvoretzky-Kiefer-Wolfowitz uniform half-width sqrt(ln(2/alpha)/(2n)) for a
// univariate empirical CDF at confidence 1-alpha. Heuristic when applied
// per-slice to bivariate estimates.
double dkw_bound(std::size_t n, double alpha);

struct PluginInputs {
  std::optional<PointGenerator> point_gen;
  std::optional<RectGenerator> rect_gen;
  std::optional<ScaleVectors> scales;
  std::optional<Anchor> anchor;
  // Truth, when known, fills sup_errors over the central quantile range.
  std::vector<Distribution> truth;
  double alpha = 0.05;
  double truth_lo_q = 0.1;
  double truth_hi_q = 0.9;
};

// Plug-in reconstruction: empirical law of the batch fed to the recover_*
// operation matching its scheme. The report notes carry the DKW budget and
// its amplified value; the budget is flagged vacuous when amplification
// pushes it past 1.
ReconstructionReport plugin_reconstruct(const SampleBatch& batch,
                                        const PluginInputs& inputs,
                                        const Grid& grid);

}  // namespace maxmin
