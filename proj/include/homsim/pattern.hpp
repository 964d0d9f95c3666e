#pragma once

#include <limits>
#include <string>
#include <vector>

#include "homsim/terms.hpp"

namespace homsim {

/// Provenance of the JSA a pattern was computed from.
struct JsaInfo {
  std::string source;  // "gaussian", "file", ...
  double rho = std::numeric_limits<double>::quiet_NaN();
  double sigma_rad_per_ps = std::numeric_limits<double>::quiet_NaN();
  double lambda_nm = std::numeric_limits<double>::quiet_NaN();
  double fwhm_nm = std::numeric_limits<double>::quiet_NaN();
  std::string file;
  std::string sha256;
};

struct PatternMeta {
  std::string engine_path;  // "kernel", "eq8", "oracle", "direct"
  JsaInfo jsa;
  int grid_n = 0;
  double grid_h = 0.0;
  double span_sigmas = std::numeric_limits<double>::quiet_NaN();
  std::string version;
};

/// A coincidence-probability sweep over delay, plus its tau->infinity
/// baseline.  Normalized values are derived, never stored.
struct InterferencePattern {
  Scheme scheme{};
  std::vector<double> taus;    // ps
  std::vector<double> values;  // raw probability
  double baseline = 0.0;
  PatternMeta meta;

  std::vector<double> normalized() const;
};

}  // namespace homsim
