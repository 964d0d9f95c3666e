#pragma once

#include <string>
#include <vector>

#include "homsim/analysis.hpp"
#include "homsim/checks.hpp"
#include "homsim/jsa.hpp"
#include "homsim/pattern.hpp"

namespace homsim {

/// Locale-independent decimal formatting, 17 significant digits
/// (round-trips doubles bit-exactly).
std::string format_double(double v);

/// Write "tau_ps,probability,normalized" CSV rows.
void write_pattern_csv(const std::string& path, const InterferencePattern& p);

/// Meta JSON: scheme, prefactor, jsa provenance, grid, baseline, engine
/// path, version.  Deterministic key order.
void write_pattern_meta(const std::string& path, const InterferencePattern& p);

std::string report_to_json(const MonotonicityReport& report);
std::string checks_to_json(const std::vector<CheckResult>& results);

/// On-disk JSA: `<base>.jsa.csv` holds the n x n matrix (plain reals or
/// "re+imJ" complex literals), row index = signal bin; `<base>.jsa.json`
/// holds {center_wavelength_nm, sigma_rad_per_ps?, spacing_rad_per_ps,
/// n_points}.
struct LoadedJsa {
  SampledJsa jsa;
  double sigma_rad_per_ps = 0.0;  // 0 when the sidecar omits it
  double center_wavelength_nm = 0.0;
};

void save_jsa(const std::string& base_path, const SampledJsa& jsa,
              double center_wavelength_nm = 0.0, double sigma_rad_per_ps = 0.0);

/// Load `<base>.jsa.csv` + `<base>.jsa.json`.  Throws std::runtime_error
/// on malformed files, shape mismatch, non-finite entries or zero norm.
LoadedJsa load_jsa(const std::string& base_path);

std::complex<double> parse_complex_literal(const std::string& token);
std::string format_complex_literal(const std::complex<double>& v);

}  // namespace homsim
