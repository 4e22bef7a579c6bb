#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "catwva/errors.hpp"
#include "catwva/spin_core.hpp"
#include "support/oracles.hpp"

using namespace catwva;
using std::numbers::pi;

TEST_CASE("coherent state at the poles is a single Dicke component") {
  const auto south = coherent_state({10}, {0.0, 1.7});
  CHECK(std::abs(south.amps(0) - 1.0) < 1e-15);
  CHECK(south.amps.tail(10).norm() == 0.0);

  const auto north = coherent_state({10}, {pi, 0.0});
  CHECK(std::abs(north.amps(10) - 1.0) < 1e-15);
  CHECK(north.amps.head(10).norm() == 0.0);
}

TEST_CASE("equatorial j = 1 amplitudes are (1/2, 1/sqrt2, 1/2)") {
  const auto state = coherent_state({2}, {0.5 * pi, 0.0});
  CHECK(state.amps(0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(state.amps(1).real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(state.amps(2).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(state.amps.imag().norm() < 1e-15);
}

TEST_CASE("coherent state matches the exponentiated-rotation oracle") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> draw_theta(0.05, pi - 0.05);
  std::uniform_real_distribution<double> draw_phi(0.0, 2.0 * pi);
  for (int two_j : {1, 2, 3, 4, 7}) {
    for (int trial = 0; trial < 4; ++trial) {
      const double theta = draw_theta(rng);
      const double phi = draw_phi(rng);
      const auto state = coherent_state({two_j}, {theta, phi});
      const Eigen::VectorXcd rotated =
          oracle::coherent_by_rotation(two_j, theta, phi);
      CHECK((state.amps - rotated).norm() < 1e-12);
    }
  }
}

TEST_CASE("coherent state has unit norm up to j = 60") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> draw_theta(0.0, pi);
  std::uniform_real_distribution<double> draw_phi(-10.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int two_j = std::uniform_int_distribution<int>(1, 120)(rng);
    const auto state =
        coherent_state({two_j}, {draw_theta(rng), draw_phi(rng)});
    CHECK(std::abs(state.squared_norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("inner product basics") {
  const auto v = coherent_state({10}, {1.1, 0.4});
  CHECK(std::abs(inner_product(v, v) - 1.0) < 1e-13);

  // antipodal coherent states are orthogonal
  const auto a = coherent_state({10}, {0.7, 0.3});
  const auto b = coherent_state({10}, {pi - 0.7, 0.3 + pi});
  CHECK(std::abs(inner_product(a, b)) < 1e-12);

  const auto other = coherent_state({8}, {1.1, 0.4});
  CHECK_THROWS_AS(inner_product(v, other), SpinMismatch);
}

TEST_CASE("cat-component overlap values") {
  const double omega = pi / 100.0;

  const auto lhs10 = coherent_state({10}, {0.5 * pi, omega});
  const auto rhs10 = coherent_state({10}, {0.5 * pi, -omega});
  CHECK(std::norm(inner_product(lhs10, rhs10)) ==
        doctest::Approx(0.990).epsilon(5e-4));

  CHECK(overlap_law({10}, {0.5 * pi, omega}, {0.5 * pi, -omega}) ==
        doctest::Approx(0.990).epsilon(5e-4));
  CHECK(overlap_law({100}, {0.5 * pi, omega}, {0.5 * pi, -omega}) ==
        doctest::Approx(0.906).epsilon(5e-4));

  const double ratio = std::pow(std::cos(omega), 20) /
                       std::pow(std::cos(omega), 200);
  CHECK(ratio == doctest::Approx(1.092).epsilon(1e-3));
}

TEST_CASE("overlap law agrees with explicit inner products") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> draw_theta(0.0, pi);
  std::uniform_real_distribution<double> draw_phi(-7.0, 7.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int two_j = std::uniform_int_distribution<int>(1, 100)(rng);
    const BlochAngles a{draw_theta(rng), draw_phi(rng)};
    const BlochAngles b{draw_theta(rng), draw_phi(rng)};
    const double law = overlap_law({two_j}, a, b);
    const double direct = std::norm(inner_product(
        coherent_state({two_j}, a), coherent_state({two_j}, b)));
    CHECK(std::abs(law - direct) < 1e-10);
  }
}

TEST_CASE("overlap law is exactly 1 at equal angles and 0 at antipodes") {
  const BlochAngles a{1.234, 0.777};
  CHECK(overlap_law({20}, a, a) == doctest::Approx(1.0).epsilon(1e-14));

  for (int two_j : {2, 4, 10, 100}) {
    CHECK(overlap_law({two_j}, {0.5 * pi, 0.25}, {0.5 * pi, 0.25 + pi}) <=
          1e-20);
    CHECK(overlap_law({two_j}, {0.3, 1.0}, {pi - 0.3, 1.0 + pi}) <= 1e-20);
  }
}

TEST_CASE("rotate_phase identity, group property, and 2pi period") {
  const auto v = coherent_state({9}, {1.0, 0.2});
  const auto same = rotate_phase(v, 0.0);
  CHECK((same.amps - v.amps).norm() == 0.0);

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> draw(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = draw(rng), b = draw(rng);
    const auto once = rotate_phase(rotate_phase(v, a), b);
    const auto joint = rotate_phase(v, a + b);
    CHECK((once.amps - joint.amps).norm() < 1e-12);
  }

  const auto integer_j = coherent_state({8}, {1.3, -0.4});
  const auto turned = rotate_phase(integer_j, 2.0 * pi);
  CHECK((turned.amps - integer_j.amps).norm() < 1e-12);
}

TEST_CASE("rotate_phase shifts the azimuth up to the tracked global phase") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> draw(-2.0, 2.0);
  for (int two_j : {3, 10, 41}) {
    const double theta = 0.9, phi = draw(rng), delta = draw(rng);
    const auto rotated =
        rotate_phase(coherent_state({two_j}, {theta, phi}), delta);
    const auto target = coherent_state({two_j}, {theta, phi + delta});
    const std::complex<double> global =
        std::polar(1.0, 0.5 * two_j * delta);  // e^{+i j delta}
    CHECK((rotated.amps - global * target.amps).norm() < 1e-12);
  }
}

TEST_CASE("rotate_phase preserves the norm") {
  const auto v = coherent_state({25}, {2.0, 0.6});
  const auto rotated = rotate_phase(v, 123.456);
  CHECK(std::abs(rotated.squared_norm() - v.squared_norm()) < 1e-14);
}

TEST_CASE("DickeVector validates its shape") {
  CHECK_THROWS_AS(DickeVector({3}, Eigen::VectorXcd::Zero(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DickeVector({0}, Eigen::VectorXcd::Zero(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(coherent_state({4}, {-0.1, 0.0}), std::invalid_argument);
}
