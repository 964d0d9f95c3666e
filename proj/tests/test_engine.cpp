#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "homsim/engine.hpp"
#include "homsim/oracle.hpp"
#include "test_util.hpp"

using namespace homsim;
using testutil::linspace;

namespace {

const std::vector<double> kTaus = linspace(0.0, 10.0, 21);

}  // namespace

TEST_CASE("P22(0) = 1/4 for any normalized symmetric JSA") {
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 21);
    const InterferencePattern p = pattern(jsa, Scheme::TwoTwo, {0.0});
    CHECK(p.values[0] == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("separable JSA collapses to exact rational constants") {
  // for rho = 0 the discrete cross overlap equals norm^2 exactly, so the
  // diagonal is 24 and every baseline is a rational multiple of it
  const SampledJsa jsa = testutil::default_gaussian(0.0, 21);
  CHECK(pattern(jsa, Scheme::TwoTwo, {0.0}).baseline ==
        doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(pattern(jsa, Scheme::ThreeOne, {0.0}).baseline ==
        doctest::Approx(3.0 / 16.0).epsilon(1e-12));
  const InterferencePattern p40 = pattern(jsa, Scheme::FourZero, {0.0});
  CHECK(p40.baseline == doctest::Approx(3.0 / 128.0).epsilon(1e-12));
  // six-fold bunching enhancement at zero delay
  CHECK(p40.values[0] == doctest::Approx(9.0 / 64.0).epsilon(1e-12));
  CHECK(p40.values[0] / p40.baseline == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("P31(0) cancels for symmetric JSAs") {
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 21);
    const InterferencePattern p = pattern(jsa, Scheme::ThreeOne, {0.0});
    CHECK(std::abs(p.values[0]) < 1e-12 * p.baseline);
  }
}

TEST_CASE("kernel path matches the oracle on random complex amplitudes") {
  // different summation order, identical quadrature; also exercises the
  // Hermitian pairing of the cross kernels since the oracle squares a
  // manifestly real magnitude
  const SampledJsa jsa = testutil::random_complex_jsa(8, 1234u);
  for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero}) {
    const TermTable table = term_table(s);
    const DelayKernelSet set = build_kernels(jsa, table);
    const InterferencePattern slow = oracle_pattern(jsa, table, kTaus, 8);
    for (std::size_t i = 0; i < kTaus.size(); ++i) {
      const double fast = set.eval(kTaus[i]);
      const double scale = std::max(std::abs(slow.values[i]), slow.baseline);
      CHECK(std::abs(fast - slow.values[i]) / scale < 1e-12);
    }
    CHECK(set.baseline() == doctest::Approx(slow.baseline).epsilon(1e-12));
  }
}

TEST_CASE("real fast path equals the forced complex path bit for bit") {
  const SampledJsa jsa = testutil::default_gaussian(0.8, 15);
  EngineOptions complex_opts;
  complex_opts.force_complex = true;
  const InterferencePattern a = pattern(jsa, Scheme::TwoTwo, kTaus);
  const InterferencePattern b = pattern(jsa, Scheme::TwoTwo, kTaus, complex_opts);
  CHECK(a.baseline == b.baseline);
  for (std::size_t i = 0; i < kTaus.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("results are bit-identical across thread counts") {
  const SampledJsa jsa = testutil::default_gaussian(-0.8, 25);
  EngineOptions one, many;
  one.threads = 1;
  many.threads = 7;
  const InterferencePattern a = pattern(jsa, Scheme::ThreeOne, kTaus, one);
  const InterferencePattern b = pattern(jsa, Scheme::ThreeOne, kTaus, many);
  CHECK(a.baseline == b.baseline);
  for (std::size_t i = 0; i < kTaus.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("quartic homogeneity is exact for a power-of-two scale") {
  const SampledJsa jsa = testutil::default_gaussian(0.5, 13);
  const SampledJsa doubled = jsa.scaled(2.0);
  EngineOptions opts;
  opts.require_normalized = false;
  const InterferencePattern p1 = pattern(jsa, Scheme::TwoTwo, kTaus, opts);
  const InterferencePattern p2 = pattern(doubled, Scheme::TwoTwo, kTaus, opts);
  for (std::size_t i = 0; i < kTaus.size(); ++i)
    CHECK(p2.values[i] == 16.0 * p1.values[i]);
  CHECK(p2.baseline == 16.0 * p1.baseline);
}

TEST_CASE("patterns are even in tau and nonnegative for real JSAs") {
  const SampledJsa jsa = testutil::default_gaussian(0.8, 17);
  for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero}) {
    const DelayKernelSet set = build_kernels(jsa, term_table(s));
    for (double tau : {0.3, 1.7, 4.4}) {
      const double plus = set.eval(tau);
      const double minus = set.eval(-tau);
      CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
      CHECK(plus >= -1e-10 * set.baseline());
    }
  }
}

TEST_CASE("shift invariance on a wide grid") {
  const double sigma = testutil::default_sigma();
  const SampledJsa jsa =
      gaussian_jsa({sigma, 0.8, 0.0}, make_grid(sigma, 8.0, 33));
  const SampledJsa shifted = shift_jsa(jsa, 2);
  for (Scheme s : {Scheme::TwoTwo, Scheme::FourZero}) {
    const InterferencePattern a = pattern(jsa, s, kTaus);
    const InterferencePattern b = pattern(shifted, s, kTaus);
    CHECK(testutil::max_rel_dev(b.values, a.values, a.baseline) < 1e-9);
  }
}

TEST_CASE("cosine-expansion path agrees with the kernel path") {
  for (double rho : {0.0, -0.8, 0.8}) {
    const SampledJsa jsa = testutil::default_gaussian(rho, 8);
    const InterferencePattern fast = pattern(jsa, Scheme::TwoTwo, kTaus);
    const InterferencePattern alt = pattern_symmetric_22(jsa, kTaus);
    CHECK(testutil::max_rel_dev(alt.values, fast.values, fast.baseline) < 1e-12);
    CHECK(alt.baseline == doctest::Approx(fast.baseline).epsilon(1e-12));
    CHECK(alt.values[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(alt.meta.engine_path == "eq8");
  }
}

TEST_CASE("cosine-expansion path rejects unsuitable JSAs") {
  SampledJsa asym = testutil::default_gaussian(0.0, 9);
  asym.amplitudes[2] *= 1.01;
  asym = normalize(SampledJsa::create(asym.grid, std::move(asym.amplitudes)));
  CHECK_THROWS_AS(pattern_symmetric_22(asym, kTaus), std::invalid_argument);

  const SampledJsa chirped = testutil::random_complex_jsa(6, 7u, true);
  CHECK_THROWS_AS(pattern_symmetric_22(chirped, kTaus), std::invalid_argument);
}

TEST_CASE("baseline helper matches the kernel diagonal") {
  const SampledJsa jsa = testutil::default_gaussian(0.8, 15);
  for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero}) {
    const double direct = baseline(jsa, s);
    const double via_kernels = build_kernels(jsa, term_table(s)).baseline();
    CHECK(direct == doctest::Approx(via_kernels).epsilon(1e-13));
  }
  CHECK(baseline(jsa, Scheme::AntiBunch11) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(baseline(jsa, Scheme::Bunch20) == doctest::Approx(0.125).epsilon(1e-8));
}

TEST_CASE("baseline matches the pattern at a long generic delay") {
  // the discrete lattice makes P(tau) periodic with period 2*pi/h, so the
  // probe delay must sit away from a revival; n = 43 puts 50/sigma at
  // about 1.5 revival periods
  const SampledJsa jsa = testutil::default_gaussian(0.0, 43);
  const double far = 50.0 / testutil::default_sigma();
  for (Scheme s : {Scheme::TwoTwo, Scheme::ThreeOne, Scheme::FourZero}) {
    const DelayKernelSet set = build_kernels(jsa, term_table(s));
    CHECK(set.eval(far) == doctest::Approx(set.baseline()).epsilon(1e-4));
  }
  const InterferencePattern slow = oracle_pattern(jsa, Scheme::TwoTwo, {far}, 43);
  CHECK(baseline(jsa, Scheme::TwoTwo) ==
        doctest::Approx(slow.values[0]).epsilon(1e-4));
}

TEST_CASE("engine rejects bad input") {
  const SampledJsa jsa = testutil::default_gaussian(0.0, 9);
  CHECK_THROWS_AS(pattern(jsa.scaled(2.0), Scheme::TwoTwo, kTaus),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      pattern(jsa, Scheme::TwoTwo, {0.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(build_kernels(jsa, two_photon_table(Scheme::Bunch20)),
                  std::invalid_argument);
  EngineOptions tiny;
  tiny.memory_budget_bytes = 1024;
  CHECK_THROWS_AS(build_kernels(jsa, term_table(Scheme::TwoTwo), tiny),
                  std::runtime_error);
}

TEST_CASE("kernel metadata") {
  const SampledJsa jsa = testutil::default_gaussian(0.0, 9);
  const DelayKernelSet set = build_kernels(jsa, term_table(Scheme::TwoTwo));
  CHECK(set.kernels.size() == 15);
  for (const auto& [key, g] : set.kernels) {
    CHECK(key.first < key.second);
    CHECK(g.size() == static_cast<std::size_t>(4 * (9 - 1) + 1));
  }
  // real JSA: accumulated kernels stay real
  for (const auto& [key, g] : set.kernels)
    for (const auto& v : g) CHECK(std::abs(v.imag()) < 1e-12);
  const InterferencePattern p = pattern(jsa, Scheme::TwoTwo, kTaus);
  CHECK(p.meta.engine_path == "kernel");
  CHECK(p.meta.grid_n == 9);
}
