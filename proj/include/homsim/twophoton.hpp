#pragma once

#include <vector>

#include "homsim/engine.hpp"
#include "homsim/jsa.hpp"
#include "homsim/pattern.hpp"

namespace homsim {

/// Two-photon dip (AntiBunch11) and bump (Bunch20) patterns by direct 2D
/// quadrature:
///   P(tau) = prefactor * sum_{j,k} |f_kj e^{-i nu_j tau}
///                                   +/- f_jk e^{-i nu_k tau}|^2 h^2
/// with the sign taken from the scheme's term table.  Baseline is the
/// analytic diagonal 2 * prefactor * norm.
InterferencePattern two_photon_pattern(const SampledJsa& jsa, Scheme scheme,
                                       const std::vector<double>& taus,
                                       const EngineOptions& opts = {});

}  // namespace homsim
