#include "homsim/terms.hpp"

#include <stdexcept>

namespace homsim {

double prefactor(Scheme s) {
  switch (s) {
    case Scheme::TwoTwo: return 1.0 / 64.0;
    case Scheme::ThreeOne: return 1.0 / 128.0;
    case Scheme::FourZero: return 1.0 / 1024.0;
    case Scheme::AntiBunch11: return 1.0 / 4.0;
    case Scheme::Bunch20: return 1.0 / 16.0;
  }
  throw std::invalid_argument("prefactor: unknown scheme");
}

bool is_four_photon(Scheme s) {
  return s == Scheme::TwoTwo || s == Scheme::ThreeOne || s == Scheme::FourZero;
}

std::string scheme_label(Scheme s) {
  switch (s) {
    case Scheme::TwoTwo: return "2/2";
    case Scheme::ThreeOne: return "3/1";
    case Scheme::FourZero: return "4/0";
    case Scheme::AntiBunch11: return "1/1";
    case Scheme::Bunch20: return "2/0";
  }
  throw std::invalid_argument("scheme_label: unknown scheme");
}

Scheme parse_scheme(const std::string& label) {
  if (label == "2/2") return Scheme::TwoTwo;
  if (label == "3/1") return Scheme::ThreeOne;
  if (label == "4/0") return Scheme::FourZero;
  if (label == "1/1") return Scheme::AntiBunch11;
  if (label == "2/0") return Scheme::Bunch20;
  throw std::invalid_argument("unknown detection scheme '" + label +
                              "' (expected 2/2, 3/1, 4/0, 1/1 or 2/0)");
}

namespace {

// The six ways to pick which two detectors receive signal arguments, in
// the fixed order (12),(34),(13),(14),(23),(24).  The idler pairing and
// the second (swapped) product follow from the partition, so each row
// fully determines f_ab f_cd + f_ad f_cb.
constexpr int kPairings[6][4] = {
    // a  b  c  d
    {1, 3, 2, 4},  // signal at 1,2
    {3, 1, 4, 2},  // signal at 3,4
    {1, 2, 3, 4},  // signal at 1,3
    {1, 2, 4, 3},  // signal at 1,4
    {2, 1, 3, 4},  // signal at 2,3
    {2, 1, 4, 3},  // signal at 2,4
};

constexpr int kSigns22[6] = {+1, +1, -1, -1, -1, -1};
constexpr int kSigns31[6] = {-1, +1, -1, +1, -1, +1};
constexpr int kSigns40[6] = {+1, +1, +1, +1, +1, +1};

}  // namespace

TermTable term_table(Scheme scheme) {
  const int* signs = nullptr;
  switch (scheme) {
    case Scheme::TwoTwo: signs = kSigns22; break;
    case Scheme::ThreeOne: signs = kSigns31; break;
    case Scheme::FourZero: signs = kSigns40; break;
    default:
      throw std::invalid_argument(
          "term_table: two-photon scheme, use two_photon_table");
  }
  TermTable table{scheme, prefactor(scheme), {}};
  table.terms.reserve(6);
  for (int t = 0; t < 6; ++t) {
    Term term;
    term.sign = signs[t];
    term.pairs = {{{kPairings[t][0], kPairings[t][1]},
                   {kPairings[t][2], kPairings[t][3]}}};
    term.pair_count = 2;
    term.phase = {kPairings[t][0], kPairings[t][2]};  // the signal detectors
    term.phase_count = 2;
    table.terms.push_back(term);
  }
  return table;
}

TermTable two_photon_table(Scheme scheme) {
  int second_sign = 0;
  switch (scheme) {
    case Scheme::AntiBunch11: second_sign = -1; break;
    case Scheme::Bunch20: second_sign = +1; break;
    default:
      throw std::invalid_argument("two_photon_table: four-photon scheme, use term_table");
  }
  TermTable table{scheme, prefactor(scheme), {}};
  Term first;
  first.sign = +1;
  first.pairs[0] = {2, 1};
  first.pair_count = 1;
  first.phase = {1, 0};
  first.phase_count = 1;
  Term second;
  second.sign = second_sign;
  second.pairs[0] = {1, 2};
  second.pair_count = 1;
  second.phase = {2, 0};
  second.phase_count = 1;
  table.terms = {first, second};
  return table;
}

TermTable table_for(Scheme scheme) {
  return is_four_photon(scheme) ? term_table(scheme) : two_photon_table(scheme);
}

namespace {

std::string f_token(int x, int y) {
  return "f" + std::to_string(x) + std::to_string(y);
}

}  // namespace

std::vector<std::string> render_term_table(const TermTable& table) {
  std::vector<std::string> lines;
  lines.reserve(table.terms.size());
  for (const auto& term : table.terms) {
    std::string s = term.sign >= 0 ? "+ " : "- ";
    if (term.pair_count == 2) {
      const int a = term.pairs[0][0], b = term.pairs[0][1];
      const int c = term.pairs[1][0], d = term.pairs[1][1];
      s += "(" + f_token(a, b) + "*" + f_token(c, d) + " + " + f_token(a, d) +
           "*" + f_token(c, b) + ")";
      s += " * e^{-i(w" + std::to_string(term.phase[0]) + "+w" +
           std::to_string(term.phase[1]) + ")tau}";
    } else {
      s += f_token(term.pairs[0][0], term.pairs[0][1]);
      s += " * e^{-i w" + std::to_string(term.phase[0]) + " tau}";
    }
    lines.push_back(std::move(s));
  }
  return lines;
}

}  // namespace homsim
