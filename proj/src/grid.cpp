#include "homsim/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim {

std::vector<double> FrequencyGrid::detunings() const {
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j) out[static_cast<std::size_t>(j)] = detuning(j);
  return out;
}

FrequencyGrid make_grid(double sigma, double span_sigmas, int n_points,
                        double center_omega) {
  if (!(sigma > 0.0)) throw std::invalid_argument("make_grid: sigma must be > 0");
  if (!(span_sigmas > 0.0)) throw std::invalid_argument("make_grid: span must be > 0");
  if (n_points < 2) throw std::invalid_argument("make_grid: n_points must be >= 2");
  const double half = span_sigmas * sigma;
  return FrequencyGrid{center_omega, 2.0 * half / (n_points - 1), n_points};
}

double gaussian_sigma_from_fwhm(double center_wavelength_nm, double fwhm_nm) {
  if (!(center_wavelength_nm > 0.0) || !(fwhm_nm > 0.0))
    throw std::invalid_argument("gaussian_sigma_from_fwhm: inputs must be > 0");
  // Delta f = c * Delta lambda / lambda^2, then FWHM -> std for a Gaussian.
  const double dfreq = kSpeedOfLightNmPerPs * fwhm_nm /
                       (center_wavelength_nm * center_wavelength_nm);
  return 2.0 * std::numbers::pi * dfreq / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
}

}  // namespace homsim
