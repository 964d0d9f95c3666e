#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "homsim/jsa.hpp"
#include "homsim/pattern.hpp"
#include "homsim/terms.hpp"

namespace homsim {

struct EngineOptions {
  int threads = 0;                 // 0 = hardware concurrency
  bool require_normalized = true;  // reject |norm - 1| > 1e-8
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
  bool force_complex = false;      // skip the real-amplitude fast path
};

/// Tau-independent reorganization of a four-photon coincidence integral.
///
/// Expanding |sum_k T_k e^{-i phi_k tau}|^2 splits P(tau) into a constant
/// diagonal (sum_k int |T_k|^2) and 15 cross kernels g_kl: the products
/// T_k conj(T_l), binned over the exact difference-frequency lattice
/// u = phi_k - phi_l.  Both phi's are sums of two detunings, so every u is
/// an integer multiple of h in [-2(n-1)h, +2(n-1)h]; binning is exact, no
/// interpolation.  Then
///   P(tau) = prefactor * (diagonal + 2 Re sum_{k<l} sum_u g_kl[u] e^{-i u tau}).
struct DelayKernelSet {
  Scheme scheme{};
  double prefactor = 0.0;
  double diagonal = 0.0;  // sum_k int |T_k|^2 (includes the h^4 weight)
  double spacing = 0.0;
  int n_points = 0;

  /// Cross kernels keyed by term pair (k,l), k < l; arrays of length
  /// 4*(n-1)+1, bin b <-> u = (b - 2(n-1))*h.
  std::map<std::pair<int, int>, std::vector<std::complex<double>>> kernels;

  double baseline() const { return prefactor * diagonal; }
  double eval(double tau) const;
  int bin_offset() const { return 2 * (n_points - 1); }
};

/// One O(n^4) pass over the grid accumulating the diagonal and all 15
/// cross kernels.  Deterministic: results are bit-identical for any thread
/// count (fixed per-row accumulation order, fixed merge order).
DelayKernelSet build_kernels(const SampledJsa& jsa, const TermTable& table,
                             const EngineOptions& opts = {});

/// Four-photon pattern via the kernel path (kernels built once, then each
/// tau costs O(n)).
InterferencePattern pattern(const SampledJsa& jsa, Scheme scheme,
                            const std::vector<double>& taus,
                            const EngineOptions& opts = {});

/// Alternate 2/2 path: direct 4D quadrature per tau of the cosine
/// expansion that |I_22|^2 collapses to for real exchange-symmetric JSAs
/// (six constant summands plus nine cosine families in the frequency
/// differences).  Used to cross-validate the kernel path.
/// Requires exchange_symmetry_defect(jsa) < 1e-10 and a real-valued JSA.
InterferencePattern pattern_symmetric_22(const SampledJsa& jsa,
                                         const std::vector<double>& taus,
                                         const EngineOptions& opts = {});

/// tau->infinity coincidence level: cross-term phases average out leaving
/// prefactor * diagonal.  Works for all five schemes.
double baseline(const SampledJsa& jsa, Scheme scheme,
                const EngineOptions& opts = {});

}  // namespace homsim
