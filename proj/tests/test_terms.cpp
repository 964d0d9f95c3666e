#include <doctest.h>

#include <stdexcept>

#include <set>

#include "homsim/terms.hpp"

using namespace homsim;

TEST_CASE("prefactors") {
  CHECK(prefactor(Scheme::TwoTwo) == 1.0 / 64.0);
  CHECK(prefactor(Scheme::ThreeOne) == 1.0 / 128.0);
  CHECK(prefactor(Scheme::FourZero) == 1.0 / 1024.0);
  CHECK(prefactor(Scheme::AntiBunch11) == 1.0 / 4.0);
  CHECK(prefactor(Scheme::Bunch20) == 1.0 / 16.0);
}

TEST_CASE("scheme labels round-trip") {
  for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero,
                   Scheme::AntiBunch11, Scheme::Bunch20})
    CHECK(parse_scheme(scheme_label(s)) == s);
  CHECK_THROWS_AS(parse_scheme("9/9"), std::invalid_argument);
}

TEST_CASE("four-photon sign vectors") {
  const int expected22[6] = {+1, +1, -1, -1, -1, -1};
  const int expected31[6] = {-1, +1, -1, +1, -1, +1};
  const auto t22 = term_table(Scheme::TwoTwo);
  const auto t31 = term_table(Scheme::ThreeOne);
  const auto t40 = term_table(Scheme::FourZero);
  REQUIRE(t22.terms.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(t22.terms[i].sign == expected22[i]);
    CHECK(t31.terms[i].sign == expected31[i]);
    CHECK(t40.terms[i].sign == +1);
  }
}

TEST_CASE("the six pairings partition the four detectors") {
  const auto table = term_table(Scheme::TwoTwo);
  std::set<std::set<int>> signal_pairs;
  for (const auto& term : table.terms) {
    const int a = term.pairs[0][0], b = term.pairs[0][1];
    const int c = term.pairs[1][0], d = term.pairs[1][1];
    const std::set<int> signal{a, c}, idler{b, d};
    std::set<int> all{a, b, c, d};
    CHECK(all == std::set<int>{1, 2, 3, 4});
    CHECK(signal.size() == 2);
    CHECK(idler.size() == 2);
    // the delay phase rides on the signal-argument detectors
    CHECK(std::set<int>{term.phase[0], term.phase[1]} == signal);
    signal_pairs.insert(signal);
  }
  // all 6 ways to choose the two signal detectors, each exactly once
  CHECK(signal_pairs.size() == 6);
}

TEST_CASE("tables differ only in signs") {
  const auto t22 = term_table(Scheme::TwoTwo);
  const auto t31 = term_table(Scheme::ThreeOne);
  const auto t40 = term_table(Scheme::FourZero);
  for (int i = 0; i < 6; ++i) {
    CHECK(t22.terms[i].pairs == t31.terms[i].pairs);
    CHECK(t22.terms[i].pairs == t40.terms[i].pairs);
    CHECK(t22.terms[i].phase == t31.terms[i].phase);
    CHECK(t22.terms[i].phase == t40.terms[i].phase);
  }
}

TEST_CASE("two-photon tables") {
  const auto anti = two_photon_table(Scheme::AntiBunch11);
  const auto bunch = two_photon_table(Scheme::Bunch20);
  REQUIRE(anti.terms.size() == 2);
  CHECK(anti.terms[0].sign == +1);
  CHECK(anti.terms[1].sign == -1);
  CHECK(bunch.terms[0].sign == +1);
  CHECK(bunch.terms[1].sign == +1);
  CHECK(anti.terms[0].pairs[0] == std::array<int, 2>{2, 1});
  CHECK(anti.terms[1].pairs[0] == std::array<int, 2>{1, 2});
  CHECK(anti.terms[0].phase[0] == 1);
  CHECK(anti.terms[1].phase[0] == 2);
}

TEST_CASE("tag routing between the two table builders") {
  CHECK_THROWS_AS(term_table(Scheme::AntiBunch11), std::invalid_argument);
  CHECK_THROWS_AS(term_table(Scheme::Bunch20), std::invalid_argument);
  CHECK_THROWS_AS(two_photon_table(Scheme::TwoTwo), std::invalid_argument);
  CHECK_NOTHROW(table_for(Scheme::Bunch20));
  CHECK_NOTHROW(table_for(Scheme::FourZero));
}

TEST_CASE("two-photon rendering") {
  const auto lines = render_term_table(two_photon_table(Scheme::AntiBunch11));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "+ f21 * e^{-i w1 tau}");
  CHECK(lines[1] == "- f12 * e^{-i w2 tau}");
  const auto bunch = render_term_table(two_photon_table(Scheme::Bunch20));
  CHECK(bunch[1] == "+ f12 * e^{-i w2 tau}");
}
