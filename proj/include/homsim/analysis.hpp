#pragma once

#include <string>
#include <vector>

#include "homsim/jsa.hpp"
#include "homsim/pattern.hpp"

namespace homsim {

enum class MonotonicityClass { MonotonicDip, MonotonicBump, Nonmonotonic, Flat };

std::string monotonicity_label(MonotonicityClass c);

struct MonotonicityReport {
  MonotonicityClass cls = MonotonicityClass::Flat;
  std::vector<double> extremum_taus;  // interior extrema (ps); nonempty iff Nonmonotonic
  double tolerance_used = 0.0;
};

/// Classify a pattern from the discrete differences of its normalized
/// values.  Differences with |d| <= rel_tolerance are treated as zero;
/// monotone means all significant differences share one sign, with the
/// direction (dip/bump) read from P(0) vs the baseline.  Flat means the
/// whole normalized pattern stays within rel_tolerance of 1.
/// Requires >= 16 samples with strictly increasing taus.
MonotonicityReport classify_monotonic(const InterferencePattern& pattern,
                                      double rel_tolerance = 1e-3);

/// V = |P(0) - baseline| / baseline; 1 means a full dip (or a 2x bump).
double visibility(const InterferencePattern& pattern);

/// Half-feature width: the largest tau (linearly interpolated) where
/// |P(tau) - baseline| >= 0.5 * |P(0) - baseline|.  Defined for monotonic
/// and nonmonotonic patterns alike; throws for flat patterns.
double feature_width(const InterferencePattern& pattern, double rel_tolerance = 1e-3);

/// Residual of the six-term cancellation that makes P31(0) vanish:
///   sqrt( sum_{j1..j4} |sum_k s_k (f_ab f_cd + f_ad f_cb)|^2 h^4 )
/// at tau = 0 with the 3/1 table; equals sqrt(128 * P31(0)).  Zero exactly
/// when the JSA is exchange-symmetric.
double symmetry_residual_31(const SampledJsa& jsa);

}  // namespace homsim
