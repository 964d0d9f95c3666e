#include "homsim/twophoton.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "homsim/version.hpp"
#include "parallel.hpp"

namespace homsim {

InterferencePattern two_photon_pattern(const SampledJsa& jsa, Scheme scheme,
                                       const std::vector<double>& taus,
                                       const EngineOptions& opts) {
  const TermTable table = two_photon_table(scheme);  // rejects four-photon tags
  if (opts.require_normalized && std::abs(jsa.norm - 1.0) > 1e-8)
    throw std::invalid_argument("two_photon_pattern: JSA is not normalized");
  for (double t : taus)
    if (!std::isfinite(t))
      throw std::invalid_argument("two_photon_pattern: non-finite tau");

  const int n = jsa.grid.n_points;
  const double h = jsa.grid.spacing;
  const double h2 = h * h;
  const std::complex<double>* amp = jsa.amplitudes.data();
  const double s1 = table.terms[0].sign;
  const double s2 = table.terms[1].sign;

  InterferencePattern out;
  out.scheme = scheme;
  out.taus = taus;
  out.values.resize(taus.size());
  out.baseline = table.prefactor * 2.0 * jsa.norm;

  detail::parallel_for(taus.size(), opts.threads, [&](std::size_t i) {
    const double tau = taus[i];
    std::vector<double> pre(static_cast<std::size_t>(n)), pim(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double ph = -jsa.grid.detuning(j) * tau;
      pre[static_cast<std::size_t>(j)] = std::cos(ph);
      pim[static_cast<std::size_t>(j)] = std::sin(ph);
    }
    // detector 1 <-> index j, detector 2 <-> index k:
    //   amplitude = s1 * f_kj * e^{-i nu_j tau} + s2 * f_jk * e^{-i nu_k tau}
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double c1 = pre[static_cast<std::size_t>(j)];
      const double d1 = pim[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) {
        const std::complex<double>& fkj = amp[static_cast<std::size_t>(k) * n + j];
        const std::complex<double>& fjk = amp[static_cast<std::size_t>(j) * n + k];
        const double c2 = pre[static_cast<std::size_t>(k)];
        const double d2 = pim[static_cast<std::size_t>(k)];
        const double re = s1 * (fkj.real() * c1 - fkj.imag() * d1) +
                          s2 * (fjk.real() * c2 - fjk.imag() * d2);
        const double im = s1 * (fkj.real() * d1 + fkj.imag() * c1) +
                          s2 * (fjk.real() * d2 + fjk.imag() * c2);
        acc += re * re + im * im;
      }
    }
    out.values[i] = table.prefactor * acc * h2;
  });

  out.meta.engine_path = "direct";
  out.meta.grid_n = n;
  out.meta.grid_h = h;
  out.meta.version = kVersion;
  return out;
}

}  // namespace homsim
