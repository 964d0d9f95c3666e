#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "homsim/grid.hpp"

using namespace homsim;

TEST_CASE("make_grid produces the arithmetic lattice") {
  const FrequencyGrid g = make_grid(1.0, 4.0, 9);
  CHECK(g.spacing == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.n_points == 9);
  const auto nu = g.detunings();
  for (int j = 0; j < 9; ++j) CHECK(nu[j] == doctest::Approx(j - 4.0).epsilon(1e-15));
}

TEST_CASE("make_grid spacing formula") {
  const FrequencyGrid g = make_grid(0.6377, 4.0, 65);
  CHECK(g.spacing == doctest::Approx(2.0 * 4.0 * 0.6377 / 64.0).epsilon(1e-14));
}

TEST_CASE("grid is symmetric about zero detuning") {
  for (int n : {2, 9, 48, 49}) {
    const FrequencyGrid g = make_grid(0.7, 4.0, n);
    for (int j = 0; j < n; ++j) {
      // exact +/- pairing, not just approximate
      CHECK(g.detuning(j) == -g.detuning(n - 1 - j));
    }
    if (n % 2 == 1) CHECK(g.detuning((n - 1) / 2) == 0.0);
  }
}

TEST_CASE("make_grid rejects degenerate input") {
  CHECK_THROWS_AS(make_grid(1.0, 4.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 4.0, 9), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1.0, -1.0, 9), std::invalid_argument);
}

TEST_CASE("gaussian_sigma_from_fwhm at 1584 nm / 2 nm") {
  // sigma = 2*pi*(c*dl/l^2) / (2*sqrt(2 ln 2)) with c = 299792.458 nm/ps
  const double sigma = gaussian_sigma_from_fwhm(1584.0, 2.0);
  CHECK(sigma == doctest::Approx(0.6376208184520807).epsilon(1e-12));
  // sanity: the underlying frequency FWHM is about 239 GHz
  const double dfreq_thz = sigma * 2.0 * std::sqrt(2.0 * std::log(2.0)) /
                           (2.0 * 3.14159265358979323846);
  CHECK(dfreq_thz == doctest::Approx(0.2389687).epsilon(1e-5));
}

TEST_CASE("gaussian_sigma_from_fwhm scales as 1/lambda^2") {
  const double s1584 = gaussian_sigma_from_fwhm(1584.0, 2.0);
  const double s792 = gaussian_sigma_from_fwhm(792.0, 2.0);
  CHECK(s792 / s1584 == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("gaussian_sigma_from_fwhm rejects non-positive input") {
  CHECK_THROWS_AS(gaussian_sigma_from_fwhm(1584.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_sigma_from_fwhm(0.0, 2.0), std::invalid_argument);
}
