#pragma once

#include <string>
#include <vector>

#include "homsim/engine.hpp"
#include "homsim/jsa.hpp"
#include "homsim/terms.hpp"

namespace homsim {

/// One validation outcome.  Deviations are measured pointwise as
/// |a - b| / max(|b|, baseline), i.e. relative to the local value or the
/// pattern scale, whichever is larger (patterns legitimately touch zero).
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct CheckOptions {
  int n_points = 8;        // grid for the engine-vs-oracle comparison
  int eq8_n_points = 16;   // grid for the cosine-expansion comparison
  double span_sigmas = 4.0;
  double tau_max = 10.0;
  int tau_points = 21;
  int threads = 0;
  std::vector<double> rhos = {0.0, -0.8, 0.8};
  double sigma = 0.0;      // 0 = derive from 1584 nm / 2 nm defaults
};

double max_pattern_deviation(const InterferencePattern& a,
                             const InterferencePattern& b);

/// Kernel path vs literal oracle on the SAME table instance.
CheckResult engine_vs_oracle(const SampledJsa& jsa, const TermTable& table,
                             const std::vector<double>& taus,
                             double threshold = 1e-10, int threads = 0);

/// Kernel path vs the symmetric cosine-expansion path for 2/2.
CheckResult eq8_vs_kernel(const SampledJsa& jsa, const std::vector<double>& taus,
                          double threshold = 1e-10, int threads = 0);

/// Pattern invariance under a common diagonal shift of the JSA.
CheckResult shift_invariance(const SampledJsa& jsa, Scheme scheme, int delta_bins,
                             const std::vector<double>& taus,
                             double threshold = 1e-9, int threads = 0);

/// Informational: symmetry residual for a JSA (never fails on its own;
/// pass/fail applies only to the symmetric reference, which must cancel).
CheckResult symmetry_residual_check(const SampledJsa& jsa, double threshold,
                                    bool expect_zero);

/// The standard validation sweep run by `homsim check`.
std::vector<CheckResult> run_standard_checks(const CheckOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace homsim
