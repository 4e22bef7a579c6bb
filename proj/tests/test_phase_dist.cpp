#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "catwva/errors.hpp"
#include "catwva/phase_dist.hpp"
#include "support/oracles.hpp"

using namespace catwva;
using std::numbers::pi;

namespace {
ProtocolParams equatorial(int two_j, double omega, double gamma) {
  return {SpinJ{two_j}, BlochAngles{0.5 * pi, 0.0}, omega, gamma};
}
}  // namespace

TEST_CASE("f_kernel closed values") {
  CHECK(f_kernel({10}, 0.0) == doctest::Approx(1024.0).epsilon(1e-12));
  CHECK(std::abs(f_kernel({10}, pi)) < 1e-9);
  CHECK(f_kernel({2}, 0.5 * pi) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("f_kernel equals the half-angle power form") {
  std::mt19937 rng(9);
  for (int two_j : {1, 2, 9, 40, 100}) {
    // stay inside the window where the alternating sum is well conditioned:
    // (1/cos(phi/2))^(2j) <= 1e7
    const double bound =
        std::min(2.5, 2.0 * std::acos(std::pow(10.0, -7.0 / two_j)));
    std::uniform_real_distribution<double> draw_phi(-bound, bound);
    for (int trial = 0; trial < 10; ++trial) {
      const double phi = draw_phi(rng);
      const double direct = f_kernel({two_j}, phi);
      const double closed = std::pow(2.0 * std::cos(0.5 * phi), two_j);
      CHECK(std::abs(direct - closed) <= 1e-10 * std::abs(closed));
    }
  }
}

TEST_CASE("three phase-density routes agree") {
  std::mt19937 rng(246);
  for (int trial = 0; trial < 25; ++trial) {
    const int two_j = std::uniform_int_distribution<int>(1, 100)(rng);
    const double omega =
        std::uniform_real_distribution<double>(-0.3, 0.3)(rng);
    const double gamma =
        std::uniform_real_distribution<double>(0.01, 0.5 * pi)(rng);
    const double phi = std::uniform_real_distribution<double>(-1.5, 1.5)(rng);

    const double vector_route =
        phase_density(equatorial(two_j, omega, gamma), phi);
    const double sum_route =
        oracle::phase_density_sum(two_j, omega, gamma, phi);
    const double product_route =
        oracle::phase_density_product(two_j, omega, gamma, phi);
    CHECK(std::abs(vector_route - sum_route) < 1e-10);
    CHECK(std::abs(vector_route - product_route) < 1e-10);
    CHECK(vector_route >= 0.0);
  }
}

TEST_CASE("omega = 0 peaks exactly at phi = 0") {
  const auto profile = sample_phase(equatorial(10, 0.0, 0.3), -0.5, 0.5, 201);
  int best = 0;
  for (int i = 1; i < profile.values.size(); ++i)
    if (profile.values(i) > profile.values(best)) best = i;
  CHECK(profile.phis(best) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("peak structure matches the single-to-double transition") {
  const double omega = pi / 100.0;

  const auto wide = find_peaks(equatorial(10, omega, 0.5 * pi));
  CHECK(wide.n_peaks == 1);
  CHECK(wide.scaled_shift < 1.0);
  CHECK_FALSE(wide.dip_at_zero);

  const auto orthogonal = find_peaks(equatorial(10, omega, 0.0));
  CHECK(orthogonal.n_peaks == 2);
  CHECK(orthogonal.dip_at_zero);
  CHECK(orthogonal.left_peak_phi < 0.0);

  // transition happens strictly inside (0, pi/2)
  int last = 1;
  bool transitioned = false;
  for (int step = 0; step <= 50; ++step) {
    const double gamma = 0.5 * pi * (1.0 - step / 50.0) + 1e-6;
    const auto report = find_peaks(equatorial(10, omega, gamma));
    CHECK((report.n_peaks == 1 || report.n_peaks == 2));
    if (last == 1 && report.n_peaks == 2) transitioned = true;
    last = report.n_peaks;
  }
  CHECK(transitioned);
}

TEST_CASE("amplification factors at gamma = pi/100") {
  const double omega = pi / 100.0;
  const auto small = find_peaks(equatorial(10, omega, pi / 100.0));
  CHECK(small.scaled_shift == doctest::Approx(15.0).epsilon(0.05));
  // high-resolution frozen value
  CHECK(small.scaled_shift == doctest::Approx(15.0214).epsilon(1e-3));

  const auto large = find_peaks(equatorial(100, omega, pi / 100.0));
  CHECK(large.scaled_shift == doctest::Approx(5.8).epsilon(0.052));
  CHECK(large.scaled_shift == doctest::Approx(5.8028).epsilon(1e-3));
}

TEST_CASE("scaled shift is non-increasing in gamma and suppressed with size") {
  const double omega = pi / 100.0;
  for (int two_j : {10, 100}) {
    double previous = 1e9;
    for (int step = 0; step < 50; ++step) {
      const double gamma =
          pi / 100.0 + (0.5 * pi - pi / 100.0) * step / 49.0;
      const auto report = find_peaks(equatorial(two_j, omega, gamma));
      CHECK(report.scaled_shift <= previous + 1e-9);
      previous = report.scaled_shift;
    }
  }

  for (double gamma : {pi / 100.0, pi / 60.0, pi / 30.0}) {
    const auto small = find_peaks(equatorial(10, omega, gamma));
    const auto large = find_peaks(equatorial(100, omega, gamma));
    CHECK(large.scaled_shift < small.scaled_shift);
  }
}

TEST_CASE("gamma = 0 density is symmetric and swapped weights mirror it") {
  const double omega = pi / 100.0;
  for (double phi : {0.05, 0.2, 0.47, 1.1}) {
    CHECK(phase_density(equatorial(10, omega, 0.0), phi) ==
          doctest::Approx(phase_density(equatorial(10, omega, 0.0), -phi))
              .epsilon(1e-12));
  }
  // gamma -> pi - gamma exchanges the branch weights, mirroring P
  for (double gamma : {0.25 * pi, 0.1, 1.3}) {
    for (double phi : {0.03, 0.31}) {
      const double swapped =
          phase_density(equatorial(10, omega, pi - gamma), phi);
      const double mirrored =
          phase_density(equatorial(10, omega, gamma), -phi);
      CHECK(swapped == doctest::Approx(mirrored).epsilon(1e-12));
    }
  }
}

TEST_CASE("find_peaks throws when the window has no interior maximum") {
  // far right flank at gamma = pi/2: P decreases monotonically
  CHECK_THROWS_AS(
      find_peaks(equatorial(10, pi / 100.0, 0.5 * pi), 0.8, 1.4, 2001),
      NoPeak);
  CHECK_THROWS_AS(find_peaks(equatorial(10, 0.0, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("weak value closed form and operator route") {
  CHECK(weak_value(0.25 * pi).weak_value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(weak_value(0.5 * pi).weak_value) < 1e-15);
  CHECK(weak_value(pi / 100.0).weak_value ==
        doctest::Approx(1.0 / std::tan(pi / 100.0)).epsilon(1e-14));
  CHECK(weak_value(pi / 100.0).weak_value ==
        doctest::Approx(31.8205).epsilon(1e-4));

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> draw(0.01, pi - 0.01);
  for (int trial = 0; trial < 50; ++trial) {
    const double gamma = draw(rng);
    const double closed = weak_value(gamma).weak_value;
    const double operator_route = oracle::weak_value_operator(gamma);
    CHECK(std::abs(closed - operator_route) <=
          1e-12 * std::max(1.0, std::abs(closed)));
  }

  CHECK_THROWS_AS(weak_value(0.0), DivergentWeakValue);
  CHECK_THROWS_AS(weak_value(pi), DivergentWeakValue);
}

TEST_CASE("predicted shift is -A Omega") {
  const auto model = weak_value(pi / 6.0);
  CHECK(model.predicted_shift(0.002) ==
        doctest::Approx(-std::sqrt(3.0) * 0.002).epsilon(1e-12));
}

TEST_CASE("taylor shift check maps the linear and breakdown regimes") {
  // linear regime
  const auto linear =
      taylor_shift_check(equatorial(10, pi / 1000.0, pi / 6.0));
  CHECK(linear.relative_error < 0.05);
  CHECK(linear.true_shift < 0.0);

  // breakdown regime: prediction 31.8 Omega vs true shift 15 Omega
  const auto broken =
      taylor_shift_check(equatorial(10, pi / 100.0, pi / 100.0));
  CHECK(broken.relative_error > 0.5);

  // symmetric point: both shifts vanish
  const auto flat = taylor_shift_check(equatorial(10, pi / 100.0, 0.5 * pi));
  CHECK(std::abs(flat.true_shift) < 1e-7);
  CHECK(std::abs(flat.predicted_shift) < 1e-15);
  CHECK(flat.relative_error == 0.0);
}
