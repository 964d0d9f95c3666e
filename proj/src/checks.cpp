#include "homsim/checks.hpp"

#include <algorithm>
#include <cmath>

#include "homsim/analysis.hpp"
#include "homsim/oracle.hpp"
#include "homsim/twophoton.hpp"

namespace homsim {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace

double max_pattern_deviation(const InterferencePattern& a,
                             const InterferencePattern& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double scale = std::max(std::abs(b.values[i]), b.baseline);
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / scale);
  }
  return worst;
}

CheckResult engine_vs_oracle(const SampledJsa& jsa, const TermTable& table,
                             const std::vector<double>& taus, double threshold,
                             int threads) {
  EngineOptions opts;
  opts.threads = threads;
  const DelayKernelSet set = build_kernels(jsa, table, opts);
  InterferencePattern fast;
  fast.scheme = table.scheme;
  fast.taus = taus;
  fast.baseline = set.baseline();
  fast.values.resize(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) fast.values[i] = set.eval(taus[i]);

  const InterferencePattern slow =
      oracle_pattern(jsa, table, taus, jsa.grid.n_points);
  const double dev = max_pattern_deviation(fast, slow);
  return CheckResult{"engine_vs_oracle[" + scheme_label(table.scheme) + "]",
                     dev < threshold, dev, threshold, ""};
}

CheckResult eq8_vs_kernel(const SampledJsa& jsa, const std::vector<double>& taus,
                          double threshold, int threads) {
  EngineOptions opts;
  opts.threads = threads;
  const InterferencePattern a = pattern(jsa, Scheme::TwoTwo, taus, opts);
  const InterferencePattern b = pattern_symmetric_22(jsa, taus, opts);
  const double dev = max_pattern_deviation(b, a);
  return CheckResult{"eq8_vs_kernel", dev < threshold, dev, threshold, ""};
}

CheckResult shift_invariance(const SampledJsa& jsa, Scheme scheme, int delta_bins,
                             const std::vector<double>& taus, double threshold,
                             int threads) {
  EngineOptions opts;
  opts.threads = threads;
  const SampledJsa shifted = shift_jsa(jsa, delta_bins);
  InterferencePattern a, b;
  if (is_four_photon(scheme)) {
    a = pattern(jsa, scheme, taus, opts);
    b = pattern(shifted, scheme, taus, opts);
  } else {
    a = two_photon_pattern(jsa, scheme, taus, opts);
    b = two_photon_pattern(shifted, scheme, taus, opts);
  }
  const double dev = max_pattern_deviation(b, a);
  return CheckResult{"shift_invariance[" + scheme_label(scheme) +
                         ",delta=" + std::to_string(delta_bins) + "]",
                     dev < threshold, dev, threshold, ""};
}

CheckResult symmetry_residual_check(const SampledJsa& jsa, double threshold,
                                    bool expect_zero) {
  const double residual = symmetry_residual_31(jsa);
  CheckResult r;
  r.name = expect_zero ? "symmetry_residual[symmetric]"
                       : "symmetry_residual[asymmetric]";
  r.max_deviation = residual;
  r.threshold = threshold;
  if (expect_zero) {
    r.passed = residual < threshold;
  } else {
    // informational: a broken symmetry must show up as a nonzero residual
    r.passed = residual > threshold;
    r.note = "residual reported for reference; nonzero is expected here";
  }
  return r;
}

std::vector<CheckResult> run_standard_checks(const CheckOptions& opts) {
  const double sigma =
      opts.sigma > 0.0 ? opts.sigma : gaussian_sigma_from_fwhm(1584.0, 2.0);
  const auto taus = linspace(0.0, opts.tau_max, opts.tau_points);
  std::vector<CheckResult> results;

  const FrequencyGrid small = make_grid(sigma, opts.span_sigmas, opts.n_points);
  for (double rho : opts.rhos) {
    const SampledJsa jsa = gaussian_jsa({sigma, rho, 0.0}, small);
    for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero}) {
      CheckResult r =
          engine_vs_oracle(jsa, term_table(s), taus, 1e-10, opts.threads);
      r.name += rho < 0 ? "[rho<0]" : (rho > 0 ? "[rho>0]" : "[rho=0]");
      results.push_back(r);
    }
  }

  const FrequencyGrid mid = make_grid(sigma, opts.span_sigmas, opts.eq8_n_points);
  for (double rho : opts.rhos) {
    const SampledJsa jsa = gaussian_jsa({sigma, rho, 0.0}, mid);
    CheckResult r = eq8_vs_kernel(jsa, taus, 1e-10, opts.threads);
    r.name += rho < 0 ? "[rho<0]" : (rho > 0 ? "[rho>0]" : "[rho=0]");
    results.push_back(r);
  }

  // the shift test needs the support to stay on-grid to ~1e-9 after the
  // shift, hence the wide span
  const FrequencyGrid wide = make_grid(sigma, 8.0, 65);
  EngineOptions eng;
  eng.threads = opts.threads;
  for (double rho : opts.rhos) {
    const SampledJsa jsa = gaussian_jsa({sigma, rho, 0.0}, wide);
    for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero,
                     Scheme::AntiBunch11, Scheme::Bunch20}) {
      const bool four = is_four_photon(s);
      const InterferencePattern ref = four
                                          ? pattern(jsa, s, taus, eng)
                                          : two_photon_pattern(jsa, s, taus, eng);
      for (int delta : {+3, -3}) {
        const SampledJsa shifted = shift_jsa(jsa, delta);
        const InterferencePattern moved =
            four ? pattern(shifted, s, taus, eng)
                 : two_photon_pattern(shifted, s, taus, eng);
        const double dev = max_pattern_deviation(moved, ref);
        results.push_back(CheckResult{
            "shift_invariance[" + scheme_label(s) + ",delta=" +
                std::to_string(delta) + "]",
            dev < 1e-9, dev, 1e-9, ""});
      }
    }
  }

  const FrequencyGrid res_grid = make_grid(sigma, opts.span_sigmas, opts.n_points);
  const SampledJsa sym = gaussian_jsa({sigma, 0.0, 0.0}, res_grid);
  results.push_back(symmetry_residual_check(sym, 1e-9, true));
  SampledJsa asym = sym;
  for (int j = 0; j < res_grid.n_points; ++j)
    for (int k = 0; k < res_grid.n_points; ++k)
      asym.amplitudes[static_cast<std::size_t>(j) * res_grid.n_points + k] *=
          1.0 + 0.1 * res_grid.detuning(j);
  asym = SampledJsa::create(asym.grid, std::move(asym.amplitudes));
  results.push_back(symmetry_residual_check(asym, 1e-3, false));

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace homsim
