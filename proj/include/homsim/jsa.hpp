#pragma once

#include <complex>
#include <vector>

#include "homsim/grid.hpp"

namespace homsim {

/// Correlated double-Gaussian joint spectral amplitude:
///   f(nu_s, nu_i) = exp(-(nu_s^2 - 2*rho*nu_s*nu_i + nu_i^2)
///                       / (4*sigma^2*(1 - rho^2)))
/// The induced intensity |f|^2 is a bivariate normal with marginal
/// standard deviation sigma on both axes, independent of rho.
struct GaussianJsaParams {
  double sigma = 1.0;                  // rad/ps, marginal std of each photon
  double rho = 0.0;                    // correlation coefficient, |rho| < 1
  double center_wavelength_nm = 0.0;   // metadata
};

/// A JSA sampled on a uniform detuning grid.  amplitudes is row-major,
/// indexed (signal bin j, idler bin k); the quadrature weight is h^2 per
/// sample and norm is the discrete value of the double integral of |f|^2.
/// Immutable by convention: all operations return new values.
struct SampledJsa {
  FrequencyGrid grid;
  std::vector<std::complex<double>> amplitudes;
  double norm = 0.0;

  double weight() const { return grid.spacing * grid.spacing; }
  const std::complex<double>& at(int j, int k) const {
    return amplitudes[static_cast<std::size_t>(j) * grid.n_points + k];
  }

  /// Validates shape, finiteness and norm > 0; computes norm.
  static SampledJsa create(FrequencyGrid grid,
                           std::vector<std::complex<double>> amplitudes);

  /// Copy scaled by a complex factor (norm scales by |c|^2).
  SampledJsa scaled(std::complex<double> c) const;
};

/// Sample the Gaussian model on a grid and normalize to norm = 1.
/// The result is real-valued, positive and exactly transpose-symmetric.
SampledJsa gaussian_jsa(const GaussianJsaParams& params, const FrequencyGrid& grid);

/// Rescale amplitudes so that norm = 1.  Throws on zero norm.
SampledJsa normalize(const SampledJsa& jsa);

/// Row/column sums of |f|^2 * h: first = signal marginal, second = idler.
std::pair<std::vector<double>, std::vector<double>> marginals(const SampledJsa& jsa);

/// max_jk |f_jk - f_kj| / max_jk |f_jk|.
double exchange_symmetry_defect(const SampledJsa& jsa);

/// Common shift of both spectra along the diagonal by delta_bins lattice
/// steps; out-of-range entries become zero, grid unchanged.
SampledJsa shift_jsa(const SampledJsa& jsa, int delta_bins);

}  // namespace homsim
