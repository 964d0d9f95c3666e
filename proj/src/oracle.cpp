#include "homsim/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "homsim/version.hpp"

namespace homsim {

// Deliberately unoptimized and single-threaded: this module is the ground
// truth the kernel engine is checked against, clarity beats speed.
InterferencePattern oracle_pattern(const SampledJsa& jsa, const TermTable& table,
                                   const std::vector<double>& taus,
                                   int n_points_cap, bool require_normalized) {
  if (!is_four_photon(table.scheme) || table.terms.size() != 6)
    throw std::invalid_argument("oracle_pattern: expected a four-photon table");
  const int n = jsa.grid.n_points;
  if (n > n_points_cap)
    throw std::invalid_argument("oracle_pattern: grid of " + std::to_string(n) +
                                " points exceeds the oracle cap of " +
                                std::to_string(n_points_cap) +
                                " (cost grows as n^4 per tau)");
  if (require_normalized && std::abs(jsa.norm - 1.0) > 1e-8)
    throw std::invalid_argument("oracle_pattern: JSA is not normalized");

  const double h = jsa.grid.spacing;
  const double h4 = h * h * h * h;
  const std::complex<double> i_unit(0.0, 1.0);

  auto f = [&](int det_a, int det_b, const int jt[4]) {
    return jsa.at(jt[det_a - 1], jt[det_b - 1]);
  };

  InterferencePattern out;
  out.scheme = table.scheme;
  out.taus = taus;
  out.values.assign(taus.size(), 0.0);

  // diagonal baseline: sum_k int |T_k|^2
  double diagonal = 0.0;
  {
    int jt[4];
    for (jt[0] = 0; jt[0] < n; ++jt[0])
      for (jt[1] = 0; jt[1] < n; ++jt[1])
        for (jt[2] = 0; jt[2] < n; ++jt[2])
          for (jt[3] = 0; jt[3] < n; ++jt[3])
            for (const auto& term : table.terms) {
              const int a = term.pairs[0][0], b = term.pairs[0][1];
              const int c = term.pairs[1][0], d = term.pairs[1][1];
              const std::complex<double> amp =
                  f(a, b, jt) * f(c, d, jt) + f(a, d, jt) * f(c, b, jt);
              diagonal += std::norm(amp);
            }
  }
  out.baseline = table.prefactor * diagonal * h4;

  for (std::size_t it = 0; it < taus.size(); ++it) {
    const double tau = taus[it];
    double total = 0.0;
    int jt[4];
    for (jt[0] = 0; jt[0] < n; ++jt[0])
      for (jt[1] = 0; jt[1] < n; ++jt[1])
        for (jt[2] = 0; jt[2] < n; ++jt[2])
          for (jt[3] = 0; jt[3] < n; ++jt[3]) {
            std::complex<double> interf(0.0, 0.0);
            for (const auto& term : table.terms) {
              const int a = term.pairs[0][0], b = term.pairs[0][1];
              const int c = term.pairs[1][0], d = term.pairs[1][1];
              const double phase = jsa.grid.detuning(jt[term.phase[0] - 1]) +
                                   jsa.grid.detuning(jt[term.phase[1] - 1]);
              interf += static_cast<double>(term.sign) *
                        (f(a, b, jt) * f(c, d, jt) + f(a, d, jt) * f(c, b, jt)) *
                        std::exp(-i_unit * phase * tau);
            }
            total += std::norm(interf);
          }
    out.values[it] = table.prefactor * total * h4;
  }

  out.meta.engine_path = "oracle";
  out.meta.grid_n = n;
  out.meta.grid_h = h;
  out.meta.version = kVersion;
  return out;
}

InterferencePattern oracle_pattern(const SampledJsa& jsa, Scheme scheme,
                                   const std::vector<double>& taus,
                                   int n_points_cap, bool require_normalized) {
  return oracle_pattern(jsa, term_table(scheme), taus, n_points_cap,
                        require_normalized);
}

}  // namespace homsim
