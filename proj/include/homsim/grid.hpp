#pragma once

#include <vector>

namespace homsim {

/// Speed of light in nm/ps (= km/s numerically).
inline constexpr double kSpeedOfLightNmPerPs = 299792.458;

/// Uniform, zero-centered lattice of frequency detunings (rad/ps).
///
/// Detunings are nu_j = (j - (n-1)/2) * spacing for j = 0..n-1, so the
/// lattice is symmetric about zero and any sum/difference of lattice
/// values lands exactly on a lattice of the same spacing.  center_omega
/// is carried as metadata only; all computations work in detunings.
struct FrequencyGrid {
  double center_omega = 0.0;  // rad/ps, metadata
  double spacing = 0.0;       // h, rad/ps
  int n_points = 0;

  double detuning(int j) const { return (j - 0.5 * (n_points - 1)) * spacing; }

  std::vector<double> detunings() const;

  bool operator==(const FrequencyGrid&) const = default;
};

/// Build a grid covering [-span_sigmas*sigma, +span_sigmas*sigma] with
/// n_points samples, h = 2*span_sigmas*sigma/(n_points-1).
/// Throws std::invalid_argument on non-positive sigma/span or n_points < 2.
FrequencyGrid make_grid(double sigma, double span_sigmas, int n_points,
                        double center_omega = 0.0);

/// Marginal angular-frequency standard deviation (rad/ps) of a photon with
/// the given intensity FWHM in wavelength terms:
///   sigma = (2*pi*c*fwhm_nm/lambda^2) / (2*sqrt(2 ln 2)).
double gaussian_sigma_from_fwhm(double center_wavelength_nm, double fwhm_nm);

}  // namespace homsim
