#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "homsim/analysis.hpp"
#include "homsim/twophoton.hpp"
#include "test_util.hpp"

using namespace homsim;
using testutil::linspace;

TEST_CASE("anti-bunching dip reaches exactly zero at tau = 0") {
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 49);
    const InterferencePattern p =
        two_photon_pattern(jsa, Scheme::AntiBunch11, {0.0});
    CHECK(p.values[0] == 0.0);  // perfect cancellation for symmetric f
    CHECK(p.baseline == doctest::Approx(0.5).epsilon(1e-8));
  }
}

TEST_CASE("bunching peak doubles the baseline") {
  const SampledJsa jsa = testutil::default_gaussian(0.0, 49);
  const InterferencePattern p = two_photon_pattern(jsa, Scheme::Bunch20, {0.0});
  CHECK(p.values[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p.baseline == doctest::Approx(0.125).epsilon(1e-8));
  CHECK(p.values[0] / p.baseline == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("uncorrelated dip follows the analytic Gaussian profile") {
  // separable JSA: P11(tau) = (1 - exp(-sigma^2 tau^2)) / 2
  const double sigma = testutil::default_sigma();
  const SampledJsa jsa = testutil::default_gaussian(0.0, 49);
  const auto taus = linspace(0.0, 3.0, 13);
  const InterferencePattern p = two_photon_pattern(jsa, Scheme::AntiBunch11, taus);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double expected =
        0.5 * (1.0 - std::exp(-sigma * sigma * taus[i] * taus[i]));
    CHECK(std::abs(p.values[i] - expected) < 5e-4);
  }
}

TEST_CASE("both two-photon patterns stay monotonic for every correlation") {
  const auto taus = linspace(0.0, 10.0, 201);
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 49);
    const auto dip =
        classify_monotonic(two_photon_pattern(jsa, Scheme::AntiBunch11, taus));
    const auto bump =
        classify_monotonic(two_photon_pattern(jsa, Scheme::Bunch20, taus));
    CHECK(dip.cls == MonotonicityClass::MonotonicDip);
    CHECK(bump.cls == MonotonicityClass::MonotonicBump);
  }
}

TEST_CASE("patterns settle to the analytic baseline by tau = 20/sigma") {
  const double far = 20.0 / testutil::default_sigma();
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 49);
    for (Scheme s : {Scheme::AntiBunch11, Scheme::Bunch20}) {
      const InterferencePattern p = two_photon_pattern(jsa, s, {far});
      CHECK(std::abs(p.values[0] - p.baseline) / p.baseline < 1e-4);
    }
  }
}

TEST_CASE("two-photon evenness and quadratic homogeneity") {
  const SampledJsa jsa = testutil::default_gaussian(0.8, 25);
  const auto taus = linspace(-4.0, 4.0, 17);
  const InterferencePattern p = two_photon_pattern(jsa, Scheme::AntiBunch11, taus);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const std::size_t mirror = taus.size() - 1 - i;
    CHECK(p.values[i] == doctest::Approx(p.values[mirror]).epsilon(1e-12));
  }
  EngineOptions opts;
  opts.require_normalized = false;
  const InterferencePattern q =
      two_photon_pattern(jsa.scaled(2.0), Scheme::AntiBunch11, taus, opts);
  for (std::size_t i = 0; i < taus.size(); ++i)
    CHECK(q.values[i] == 4.0 * p.values[i]);
}

TEST_CASE("two_photon_pattern rejects four-photon schemes") {
  const SampledJsa jsa = testutil::default_gaussian(0.0, 15);
  CHECK_THROWS_AS(two_photon_pattern(jsa, Scheme::TwoTwo, {0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_photon_pattern(jsa.scaled(3.0), Scheme::Bunch20, {0.0}),
                  std::invalid_argument);
}
