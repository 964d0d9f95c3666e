#include "homsim/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "homsim/version.hpp"
#include "parallel.hpp"

namespace homsim {

namespace {

constexpr double kNormTolerance = 1e-8;

// Term recipe with 0-based tuple slots: amplitude is
//   sign * (A(jt[a],jt[b]) A(jt[c],jt[d]) + A(jt[a],jt[d]) A(jt[c],jt[b]))
// and the delay phase bin is jt[m1] + jt[m2].
struct TermPlan {
  double sign;
  int a, b, c, d;
  int m1, m2;
};

std::vector<TermPlan> make_plan(const TermTable& table) {
  if (!is_four_photon(table.scheme) || table.terms.size() != 6)
    throw std::invalid_argument("engine: expected a six-term four-photon table");
  std::vector<TermPlan> plan;
  plan.reserve(6);
  for (const auto& t : table.terms) {
    if (t.pair_count != 2 || t.phase_count != 2)
      throw std::invalid_argument("engine: malformed four-photon term");
    plan.push_back(TermPlan{static_cast<double>(t.sign), t.pairs[0][0] - 1,
                            t.pairs[0][1] - 1, t.pairs[1][0] - 1,
                            t.pairs[1][1] - 1, t.phase[0] - 1, t.phase[1] - 1});
  }
  return plan;
}

void require_normalized_jsa(const SampledJsa& jsa, const EngineOptions& opts) {
  if (opts.require_normalized && std::abs(jsa.norm - 1.0) > kNormTolerance)
    throw std::invalid_argument("engine: JSA is not normalized (norm = " +
                                std::to_string(jsa.norm) + ")");
}

bool all_real(const SampledJsa& jsa) {
  for (const auto& a : jsa.amplitudes)
    if (a.imag() != 0.0) return false;
  return true;
}

// One j1-row of the accumulation.  Row buffers are merged in j1 order
// afterwards, so the result is bit-identical for any thread count.
template <bool Real>
void accumulate_row(int j1, int n, const std::complex<double>* amp,
                    const std::vector<TermPlan>& plan, int n_bins,
                    double* diag_out, double* kre, double* kim) {
  const int off = 2 * (n - 1);
  double diag = 0.0;
  int jt[4];
  jt[0] = j1;
  double t_re[6], t_im[6];
  int psum[6];
  for (int j2 = 0; j2 < n; ++j2) {
    jt[1] = j2;
    for (int j3 = 0; j3 < n; ++j3) {
      jt[2] = j3;
      for (int j4 = 0; j4 < n; ++j4) {
        jt[3] = j4;
        for (int t = 0; t < 6; ++t) {
          const TermPlan& p = plan[static_cast<std::size_t>(t)];
          const std::complex<double>& f1 = amp[jt[p.a] * n + jt[p.b]];
          const std::complex<double>& f2 = amp[jt[p.c] * n + jt[p.d]];
          const std::complex<double>& f3 = amp[jt[p.a] * n + jt[p.d]];
          const std::complex<double>& f4 = amp[jt[p.c] * n + jt[p.b]];
          if constexpr (Real) {
            t_re[t] = p.sign * (f1.real() * f2.real() + f3.real() * f4.real());
          } else {
            const double re = f1.real() * f2.real() - f1.imag() * f2.imag() +
                              f3.real() * f4.real() - f3.imag() * f4.imag();
            const double im = f1.real() * f2.imag() + f1.imag() * f2.real() +
                              f3.real() * f4.imag() + f3.imag() * f4.real();
            t_re[t] = p.sign * re;
            t_im[t] = p.sign * im;
          }
          psum[t] = jt[p.m1] + jt[p.m2];
        }
        if constexpr (Real) {
          for (int t = 0; t < 6; ++t) diag += t_re[t] * t_re[t];
        } else {
          for (int t = 0; t < 6; ++t) diag += t_re[t] * t_re[t] + t_im[t] * t_im[t];
        }
        int pair = 0;
        for (int k = 0; k < 6; ++k) {
          for (int l = k + 1; l < 6; ++l, ++pair) {
            const int bin = pair * n_bins + (psum[k] - psum[l] + off);
            if constexpr (Real) {
              kre[bin] += t_re[k] * t_re[l];
            } else {
              // T_k * conj(T_l)
              kre[bin] += t_re[k] * t_re[l] + t_im[k] * t_im[l];
              kim[bin] += t_im[k] * t_re[l] - t_re[k] * t_im[l];
            }
          }
        }
      }
    }
  }
  *diag_out = diag;
}

}  // namespace

double DelayKernelSet::eval(double tau) const {
  const int n_bins = 4 * (n_points - 1) + 1;
  const int off = bin_offset();
  // combine the 15 kernels once (fixed map order), then a single trig pass
  std::vector<double> gre(static_cast<std::size_t>(n_bins), 0.0);
  std::vector<double> gim(static_cast<std::size_t>(n_bins), 0.0);
  for (const auto& [key, g] : kernels) {
    for (int b = 0; b < n_bins; ++b) {
      gre[static_cast<std::size_t>(b)] += g[static_cast<std::size_t>(b)].real();
      gim[static_cast<std::size_t>(b)] += g[static_cast<std::size_t>(b)].imag();
    }
  }
  double acc = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    const double u = (b - off) * spacing;
    // Re( g * e^{-i u tau} )
    acc += gre[static_cast<std::size_t>(b)] * std::cos(u * tau) +
           gim[static_cast<std::size_t>(b)] * std::sin(u * tau);
  }
  return prefactor * (diagonal + 2.0 * acc);
}

DelayKernelSet build_kernels(const SampledJsa& jsa, const TermTable& table,
                             const EngineOptions& opts) {
  require_normalized_jsa(jsa, opts);
  const auto plan = make_plan(table);
  const int n = jsa.grid.n_points;
  const int n_bins = 4 * (n - 1) + 1;
  const bool real_path = !opts.force_complex && all_real(jsa);

  const std::size_t row_doubles =
      static_cast<std::size_t>(15) * n_bins * (real_path ? 1 : 2);
  const std::size_t estimate =
      static_cast<std::size_t>(n) * (row_doubles + 1) * sizeof(double);
  if (estimate > opts.memory_budget_bytes)
    throw std::runtime_error("build_kernels: memory estimate " +
                             std::to_string(estimate) +
                             " bytes exceeds budget for n_points = " +
                             std::to_string(n));

  // one accumulation buffer per j1 row
  std::vector<double> rows(static_cast<std::size_t>(n) * row_doubles, 0.0);
  std::vector<double> row_diag(static_cast<std::size_t>(n), 0.0);
  const std::complex<double>* amp = jsa.amplitudes.data();

  detail::parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t j1) {
    double* kre = rows.data() + j1 * row_doubles;
    double* kim = real_path ? nullptr : kre + static_cast<std::size_t>(15) * n_bins;
    if (real_path)
      accumulate_row<true>(static_cast<int>(j1), n, amp, plan, n_bins,
                           &row_diag[j1], kre, kim);
    else
      accumulate_row<false>(static_cast<int>(j1), n, amp, plan, n_bins,
                            &row_diag[j1], kre, kim);
  });

  DelayKernelSet set;
  set.scheme = table.scheme;
  set.prefactor = table.prefactor;
  set.spacing = jsa.grid.spacing;
  set.n_points = n;
  const double h = jsa.grid.spacing;
  const double h4 = h * h * h * h;

  double diag = 0.0;
  for (int j1 = 0; j1 < n; ++j1) diag += row_diag[static_cast<std::size_t>(j1)];
  set.diagonal = diag * h4;

  int pair = 0;
  for (int k = 0; k < 6; ++k) {
    for (int l = k + 1; l < 6; ++l, ++pair) {
      std::vector<std::complex<double>> g(static_cast<std::size_t>(n_bins),
                                          std::complex<double>(0.0, 0.0));
      for (int j1 = 0; j1 < n; ++j1) {
        const double* kre = rows.data() + static_cast<std::size_t>(j1) * row_doubles +
                            static_cast<std::size_t>(pair) * n_bins;
        const double* kim =
            real_path ? nullptr : kre + static_cast<std::size_t>(15) * n_bins;
        for (int b = 0; b < n_bins; ++b) {
          const std::size_t ib = static_cast<std::size_t>(b);
          g[ib] += std::complex<double>(kre[ib], real_path ? 0.0 : kim[ib]);
        }
      }
      for (auto& v : g) v *= h4;
      set.kernels.emplace(std::make_pair(k, l), std::move(g));
    }
  }
  return set;
}

InterferencePattern pattern(const SampledJsa& jsa, Scheme scheme,
                            const std::vector<double>& taus,
                            const EngineOptions& opts) {
  for (double t : taus)
    if (!std::isfinite(t)) throw std::invalid_argument("pattern: non-finite tau");
  const TermTable table = term_table(scheme);
  const DelayKernelSet set = build_kernels(jsa, table, opts);

  InterferencePattern p;
  p.scheme = scheme;
  p.taus = taus;
  p.values.resize(taus.size());
  p.baseline = set.baseline();
  detail::parallel_for(taus.size(), opts.threads,
                       [&](std::size_t i) { p.values[i] = set.eval(taus[i]); });
  p.meta.engine_path = "kernel";
  p.meta.grid_n = jsa.grid.n_points;
  p.meta.grid_h = jsa.grid.spacing;
  p.meta.version = kVersion;
  return p;
}

namespace {

constexpr double kSymmetryDefectLimit = 1e-10;

}  // namespace

InterferencePattern pattern_symmetric_22(const SampledJsa& jsa,
                                         const std::vector<double>& taus,
                                         const EngineOptions& opts) {
  require_normalized_jsa(jsa, opts);
  const double defect = exchange_symmetry_defect(jsa);
  if (!(defect < kSymmetryDefectLimit))
    throw std::invalid_argument(
        "pattern_symmetric_22: JSA exchange-symmetry defect " +
        std::to_string(defect) + " exceeds 1e-10");
  double max_im = 0.0, max_abs = 0.0;
  for (const auto& a : jsa.amplitudes) {
    max_im = std::max(max_im, std::abs(a.imag()));
    max_abs = std::max(max_abs, std::abs(a));
  }
  if (max_im > 1e-12 * max_abs)
    throw std::invalid_argument(
        "pattern_symmetric_22: cosine expansion requires a real-valued JSA");

  const int n = jsa.grid.n_points;
  const double h = jsa.grid.spacing;
  const double h4 = h * h * h * h;
  // real copy, row-major
  std::vector<double> A(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < A.size(); ++i) A[i] = jsa.amplitudes[i].real();

  const double pref = prefactor(Scheme::TwoTwo);

  // tau-independent part: sum of the six constant summands
  double constant = 0.0;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j3 = 0; j3 < n; ++j3) {
        const double* r1 = A.data() + static_cast<std::size_t>(j1) * n;
        const double* r2 = A.data() + static_cast<std::size_t>(j2) * n;
        const double* r3 = A.data() + static_cast<std::size_t>(j3) * n;
        const double f12 = r1[j2];
        for (int j4 = 0; j4 < n; ++j4) {
          const double p = f12 * r3[j4];
          const double q = r1[j3] * r2[j4];
          const double r = r1[j4] * r2[j3];
          constant += p * p + q * q + r * r + p * q + p * r + q * r;
        }
      }

  InterferencePattern out;
  out.scheme = Scheme::TwoTwo;
  out.taus = taus;
  out.values.resize(taus.size());
  // the cosine expansion sums to one quarter of the squared six-term
  // amplitude; fold the compensating 4 into the overall weight
  const double weight = 4.0 * pref * h4;
  out.baseline = weight * constant;

  detail::parallel_for(taus.size(), opts.threads, [&](std::size_t i) {
    const double tau = taus[i];
    // cosine lookup tables on the exact difference lattices
    const int nd = 2 * n - 1, offd = n - 1;
    const int nq = 4 * n - 3, offq = 2 * (n - 1);
    std::vector<double> D(static_cast<std::size_t>(nd));
    std::vector<double> Q(static_cast<std::size_t>(nq));
    for (int x = 0; x < nd; ++x)
      D[static_cast<std::size_t>(x)] = std::cos((x - offd) * h * tau);
    for (int x = 0; x < nq; ++x)
      Q[static_cast<std::size_t>(x)] = std::cos((x - offq) * h * tau);

    double s = 0.0;
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2) {
        const double* r1 = A.data() + static_cast<std::size_t>(j1) * n;
        const double* r2 = A.data() + static_cast<std::size_t>(j2) * n;
        const double c12 = D[static_cast<std::size_t>(j1 - j2 + offd)];
        const double f12 = r1[j2];
        for (int j3 = 0; j3 < n; ++j3) {
          const double* r3 = A.data() + static_cast<std::size_t>(j3) * n;
          const double c13 = D[static_cast<std::size_t>(j1 - j3 + offd)];
          const double c23 = D[static_cast<std::size_t>(j2 - j3 + offd)];
          for (int j4 = 0; j4 < n; ++j4) {
            const double p = f12 * r3[j4];
            const double q = r1[j3] * r2[j4];
            const double r = r1[j4] * r2[j3];
            const double c34 = D[static_cast<std::size_t>(j3 - j4 + offd)];
            const double c14 = D[static_cast<std::size_t>(j1 - j4 + offd)];
            const double c24 = D[static_cast<std::size_t>(j2 - j4 + offd)];
            const double qA = Q[static_cast<std::size_t>((j1 - j3) + (j2 - j4) + offq)];
            const double qB = Q[static_cast<std::size_t>((j1 - j2) + (j3 - j4) + offq)];
            const double qC = Q[static_cast<std::size_t>((j1 - j2) - (j3 - j4) + offq)];
            s += p * p + q * q + r * r + p * q + p * r + q * r +
                 (p + q) * (p + r) * (c12 + c34) -
                 (p + q) * (q + r) * (c13 + c24) -
                 (p + r) * (q + r) * (c14 + c23) +
                 0.5 * ((q + r) * (q + r) * qA + (p + r) * (p + r) * qB +
                        (p + q) * (p + q) * qC);
          }
        }
      }
    out.values[i] = weight * s;
  });

  out.meta.engine_path = "eq8";
  out.meta.grid_n = n;
  out.meta.grid_h = h;
  out.meta.version = kVersion;
  return out;
}

double baseline(const SampledJsa& jsa, Scheme scheme, const EngineOptions& opts) {
  require_normalized_jsa(jsa, opts);
  if (!is_four_photon(scheme)) {
    // diagonal of the two-photon integrand: both |f_kj|^2 and |f_jk|^2
    // integrate to the norm
    return prefactor(scheme) * 2.0 * jsa.norm;
  }
  const TermTable table = term_table(scheme);
  const auto plan = make_plan(table);
  const int n = jsa.grid.n_points;
  const std::complex<double>* amp = jsa.amplitudes.data();
  std::vector<double> row_diag(static_cast<std::size_t>(n), 0.0);
  detail::parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t j1) {
    int jt[4];
    jt[0] = static_cast<int>(j1);
    double acc = 0.0;
    for (int j2 = 0; j2 < n; ++j2) {
      jt[1] = j2;
      for (int j3 = 0; j3 < n; ++j3) {
        jt[2] = j3;
        for (int j4 = 0; j4 < n; ++j4) {
          jt[3] = j4;
          for (const auto& p : plan) {
            const std::complex<double>& f1 = amp[jt[p.a] * n + jt[p.b]];
            const std::complex<double>& f2 = amp[jt[p.c] * n + jt[p.d]];
            const std::complex<double>& f3 = amp[jt[p.a] * n + jt[p.d]];
            const std::complex<double>& f4 = amp[jt[p.c] * n + jt[p.b]];
            const double re = f1.real() * f2.real() - f1.imag() * f2.imag() +
                              f3.real() * f4.real() - f3.imag() * f4.imag();
            const double im = f1.real() * f2.imag() + f1.imag() * f2.real() +
                              f3.real() * f4.imag() + f3.imag() * f4.real();
            acc += re * re + im * im;
          }
        }
      }
    }
    row_diag[j1] = acc;
  });
  double diag = 0.0;
  for (int j1 = 0; j1 < n; ++j1) diag += row_diag[static_cast<std::size_t>(j1)];
  const double h = jsa.grid.spacing;
  return table.prefactor * diag * h * h * h * h;
}

}  // namespace homsim
