#include "homsim/jsa.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace homsim {

namespace {

double compute_norm(const FrequencyGrid& grid,
                    const std::vector<std::complex<double>>& amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s * grid.spacing * grid.spacing;
}

}  // namespace

SampledJsa SampledJsa::create(FrequencyGrid grid,
                              std::vector<std::complex<double>> amplitudes) {
  if (grid.n_points < 2 || !(grid.spacing > 0.0))
    throw std::invalid_argument("SampledJsa: invalid grid");
  const auto n = static_cast<std::size_t>(grid.n_points);
  if (amplitudes.size() != n * n)
    throw std::invalid_argument("SampledJsa: amplitude matrix must be n x n");
  for (const auto& a : amplitudes)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("SampledJsa: non-finite amplitude");
  SampledJsa jsa{std::move(grid), std::move(amplitudes), 0.0};
  jsa.norm = compute_norm(jsa.grid, jsa.amplitudes);
  if (!(jsa.norm > 0.0)) throw std::invalid_argument("SampledJsa: zero norm");
  return jsa;
}

SampledJsa SampledJsa::scaled(std::complex<double> c) const {
  SampledJsa out = *this;
  for (auto& a : out.amplitudes) a *= c;
  out.norm = norm * std::norm(c);
  return out;
}

SampledJsa gaussian_jsa(const GaussianJsaParams& params, const FrequencyGrid& grid) {
  if (!(params.sigma > 0.0))
    throw std::invalid_argument("gaussian_jsa: sigma must be > 0");
  if (!(std::abs(params.rho) < 1.0))
    throw std::invalid_argument("gaussian_jsa: |rho| must be < 1");
  const int n = grid.n_points;
  const double denom = 4.0 * params.sigma * params.sigma * (1.0 - params.rho * params.rho);
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const double nj = grid.detuning(j);
    for (int k = 0; k <= j; ++k) {
      const double nk = grid.detuning(k);
      const double v =
          std::exp(-(nj * nj - 2.0 * params.rho * nj * nk + nk * nk) / denom);
      // exponent is symmetric in (nu_j, nu_k): fill both triangles from one
      // evaluation so the matrix equals its transpose bitwise
      amps[static_cast<std::size_t>(j) * n + k] = v;
      amps[static_cast<std::size_t>(k) * n + j] = v;
    }
  }
  return normalize(SampledJsa::create(grid, std::move(amps)));
}

SampledJsa normalize(const SampledJsa& jsa) {
  if (!(jsa.norm > 0.0)) throw std::invalid_argument("normalize: zero norm");
  return jsa.scaled(1.0 / std::sqrt(jsa.norm));
}

std::pair<std::vector<double>, std::vector<double>> marginals(const SampledJsa& jsa) {
  const int n = jsa.grid.n_points;
  const double h = jsa.grid.spacing;
  std::vector<double> ms(static_cast<std::size_t>(n), 0.0);
  std::vector<double> mi(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double w = std::norm(jsa.at(j, k));
      ms[static_cast<std::size_t>(j)] += w;
      mi[static_cast<std::size_t>(k)] += w;
    }
  for (auto& v : ms) v *= h;
  for (auto& v : mi) v *= h;
  return {std::move(ms), std::move(mi)};
}

double exchange_symmetry_defect(const SampledJsa& jsa) {
  const int n = jsa.grid.n_points;
  double max_abs = 0.0, max_diff = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      max_abs = std::max(max_abs, std::abs(jsa.at(j, k)));
      max_diff = std::max(max_diff, std::abs(jsa.at(j, k) - jsa.at(k, j)));
    }
  return max_diff / max_abs;
}

SampledJsa shift_jsa(const SampledJsa& jsa, int delta_bins) {
  const int n = jsa.grid.n_points;
  if (std::abs(delta_bins) >= n)
    throw std::invalid_argument("shift_jsa: |delta_bins| must be < n_points");
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n) * n,
                                         std::complex<double>(0.0, 0.0));
  for (int j = 0; j < n; ++j) {
    const int js = j - delta_bins;
    if (js < 0 || js >= n) continue;
    for (int k = 0; k < n; ++k) {
      const int ks = k - delta_bins;
      if (ks < 0 || ks >= n) continue;
      amps[static_cast<std::size_t>(j) * n + k] = jsa.at(js, ks);
    }
  }
  return SampledJsa::create(jsa.grid, std::move(amps));
}

}  // namespace homsim
