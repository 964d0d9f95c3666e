#include "homsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {

std::string monotonicity_label(MonotonicityClass c) {
  switch (c) {
    case MonotonicityClass::MonotonicDip: return "monotonic_dip";
    case MonotonicityClass::MonotonicBump: return "monotonic_bump";
    case MonotonicityClass::Nonmonotonic: return "nonmonotonic";
    case MonotonicityClass::Flat: return "flat";
  }
  throw std::invalid_argument("monotonicity_label: unknown class");
}

MonotonicityReport classify_monotonic(const InterferencePattern& pattern,
                                      double rel_tolerance) {
  const auto& taus = pattern.taus;
  if (taus.size() < 16)
    throw std::invalid_argument("classify_monotonic: need at least 16 samples");
  for (std::size_t i = 1; i < taus.size(); ++i)
    if (!(taus[i] > taus[i - 1]))
      throw std::invalid_argument("classify_monotonic: taus must be strictly increasing");
  if (!(pattern.baseline > 0.0))
    throw std::invalid_argument("classify_monotonic: baseline must be positive");

  const std::vector<double> v = pattern.normalized();
  MonotonicityReport report;
  report.tolerance_used = rel_tolerance;

  double max_dev = 0.0;
  for (double x : v) max_dev = std::max(max_dev, std::abs(x - 1.0));
  if (max_dev <= rel_tolerance) {
    report.cls = MonotonicityClass::Flat;
    return report;
  }

  // walk the significant differences; a sign flip marks an interior extremum
  int last_sign = 0;
  std::size_t last_idx = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double d = v[i + 1] - v[i];
    if (std::abs(d) <= rel_tolerance) continue;
    const int sign = d > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) {
      // the extremum sits between the two opposing runs
      std::size_t ext = last_idx + 1;
      for (std::size_t j = last_idx + 1; j <= i; ++j) {
        const bool want_max = last_sign > 0;
        if ((want_max && v[j] > v[ext]) || (!want_max && v[j] < v[ext])) ext = j;
      }
      report.extremum_taus.push_back(taus[ext]);
    }
    last_sign = sign;
    last_idx = i;
  }

  if (!report.extremum_taus.empty()) {
    report.cls = MonotonicityClass::Nonmonotonic;
  } else {
    report.cls = v.front() < 1.0 ? MonotonicityClass::MonotonicDip
                                 : MonotonicityClass::MonotonicBump;
  }
  return report;
}

double visibility(const InterferencePattern& pattern) {
  if (!(pattern.baseline > 0.0))
    throw std::invalid_argument("visibility: baseline must be positive");
  if (pattern.values.empty())
    throw std::invalid_argument("visibility: empty pattern");
  return std::abs(pattern.values.front() - pattern.baseline) / pattern.baseline;
}

double feature_width(const InterferencePattern& pattern, double rel_tolerance) {
  if (!(pattern.baseline > 0.0))
    throw std::invalid_argument("feature_width: baseline must be positive");
  if (pattern.values.size() < 2)
    throw std::invalid_argument("feature_width: need at least 2 samples");
  const double base = pattern.baseline;
  const double feature = std::abs(pattern.values.front() - base);
  if (feature <= rel_tolerance * base)
    throw std::invalid_argument("feature_width: pattern is flat, no feature");
  const double threshold = 0.5 * feature;

  const auto& taus = pattern.taus;
  const auto& vals = pattern.values;
  const std::size_t last = vals.size() - 1;
  // largest tau still at or above half feature, linearly interpolated at
  // the crossing towards the next sample
  for (std::size_t r = 0; r <= last; ++r) {
    const std::size_t i = last - r;
    const double di = std::abs(vals[i] - base);
    if (di < threshold) continue;
    if (i == last) return taus[last];
    const double dn = std::abs(vals[i + 1] - base);
    const double frac = (di - threshold) / (di - dn);
    return taus[i] + frac * (taus[i + 1] - taus[i]);
  }
  throw std::invalid_argument("feature_width: no sample reaches half feature");
}

double symmetry_residual_31(const SampledJsa& jsa) {
  const TermTable table = term_table(Scheme::ThreeOne);
  const int n = jsa.grid.n_points;
  const double h = jsa.grid.spacing;
  double total = 0.0;
  int jt[4];
  for (jt[0] = 0; jt[0] < n; ++jt[0])
    for (jt[1] = 0; jt[1] < n; ++jt[1])
      for (jt[2] = 0; jt[2] < n; ++jt[2])
        for (jt[3] = 0; jt[3] < n; ++jt[3]) {
          double re = 0.0, im = 0.0;
          for (const auto& term : table.terms) {
            const std::complex<double>& f1 =
                jsa.at(jt[term.pairs[0][0] - 1], jt[term.pairs[0][1] - 1]);
            const std::complex<double>& f2 =
                jsa.at(jt[term.pairs[1][0] - 1], jt[term.pairs[1][1] - 1]);
            const std::complex<double>& f3 =
                jsa.at(jt[term.pairs[0][0] - 1], jt[term.pairs[1][1] - 1]);
            const std::complex<double>& f4 =
                jsa.at(jt[term.pairs[1][0] - 1], jt[term.pairs[0][1] - 1]);
            re += term.sign * (f1.real() * f2.real() - f1.imag() * f2.imag() +
                               f3.real() * f4.real() - f3.imag() * f4.imag());
            im += term.sign * (f1.real() * f2.imag() + f1.imag() * f2.real() +
                               f3.real() * f4.imag() + f3.imag() * f4.real());
          }
          total += re * re + im * im;
        }
  return std::sqrt(total * h * h * h * h);
}

}  // namespace homsim
