#pragma once

#include <vector>

#include "homsim/engine.hpp"
#include "homsim/jsa.hpp"
#include "homsim/pattern.hpp"

namespace homsim {

/// Literal evaluation of the four-photon coincidence integral: per tau,
///   P(tau) = prefactor * sum_{j1..j4} |sum_k s_k (f_ab f_cd + f_ad f_cb)
///                                      e^{-i(nu_a + nu_c) tau}|^2 h^4.
/// No reorganization, no caching, single-threaded; cost n^4 per tau.
/// The grid is capped (default 16) to prevent accidental blowups.
/// Consumes the same TermTable type as the engine so both paths share one
/// definition of the signed pairings.
InterferencePattern oracle_pattern(const SampledJsa& jsa, const TermTable& table,
                                   const std::vector<double>& taus,
                                   int n_points_cap = 16,
                                   bool require_normalized = true);

InterferencePattern oracle_pattern(const SampledJsa& jsa, Scheme scheme,
                                   const std::vector<double>& taus,
                                   int n_points_cap = 16,
                                   bool require_normalized = true);

}  // namespace homsim
