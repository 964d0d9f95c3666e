#pragma once

#include <array>
#include <string>
#include <vector>

namespace homsim {

/// Detector partitions across the two beamsplitter output ports.
/// TwoTwo/ThreeOne/FourZero are the four-photon schemes; AntiBunch11 and
/// Bunch20 are the two-photon anti-bunching and bunching tests.
enum class Scheme { TwoTwo, ThreeOne, FourZero, AntiBunch11, Bunch20 };

double prefactor(Scheme s);  // 1/64, 1/128, 1/1024, 1/4, 1/16
bool is_four_photon(Scheme s);
std::string scheme_label(Scheme s);      // "2/2", "3/1", "4/0", "1/1", "2/0"
Scheme parse_scheme(const std::string& label);

/// One signed summand of the interference amplitude.
///
/// Four-photon terms expand to
///   sign * (f_{ab} f_{cd} + f_{ad} f_{cb}) * e^{-i(w_a + w_c) tau}
/// with pairs = {(a,b),(c,d)}; the first index of each pair is the detector
/// receiving a signal-arm argument, so phase = {a,c} (the delay acts on the
/// signal arm).  Two-photon terms use a single pair (a,b) and expand to
///   sign * f_{ab} * e^{-i w_phase tau}.
struct Term {
  int sign = 1;
  std::array<std::array<int, 2>, 2> pairs{};  // 1-based detector indices
  int pair_count = 0;
  std::array<int, 2> phase{};                 // detectors carrying e^{-i w tau}
  int phase_count = 0;
};

struct TermTable {
  Scheme scheme;
  double prefactor = 0.0;
  std::vector<Term> terms;
};

/// The six-term tables of the four-photon schemes.  Signal pairs appear in
/// the fixed order (12),(34),(13),(14),(23),(24) with signs
///   TwoTwo:   (+,+,-,-,-,-)
///   ThreeOne: (-,+,-,+,-,+)
///   FourZero: (+,+,+,+,+,+)
/// Throws std::invalid_argument for two-photon tags (use two_photon_table).
TermTable term_table(Scheme scheme);

/// The two-term tables of the two-photon schemes:
///   AntiBunch11:  + f_{21} e^{-i w1 tau}  -  f_{12} e^{-i w2 tau}
///   Bunch20:      + f_{21} e^{-i w1 tau}  +  f_{12} e^{-i w2 tau}
TermTable two_photon_table(Scheme scheme);

/// Dispatch on the scheme kind.
TermTable table_for(Scheme scheme);

/// Human-readable rendering of the signed expansion, one line per term,
/// e.g. "+ (f13*f24 + f14*f23) * e^{-i(w1+w2)tau}".
std::vector<std::string> render_term_table(const TermTable& table);

}  // namespace homsim
