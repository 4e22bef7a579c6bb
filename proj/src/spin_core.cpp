#include "catwva/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "catwva/errors.hpp"
#include "catwva/specfun.hpp"

namespace catwva {

DickeVector::DickeVector(SpinJ s, Eigen::VectorXcd a)
    : spin(s), amps(std::move(a)) {
  if (spin.two_j < 1)
    throw std::invalid_argument("DickeVector: need two_j >= 1");
  if (amps.size() != spin.dim())
    throw std::invalid_argument("DickeVector: amplitude count != 2j+1");
}

DickeVector coherent_state(SpinJ spin, const BlochAngles& angles) {
  if (!(angles.theta >= 0.0 && angles.theta <= std::numbers::pi))
    throw std::invalid_argument("coherent_state: theta outside [0, pi]");

  const int n = spin.two_j;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n + 1);

  // The poles are single Dicke components; the log-space path below would
  // take log(0) there.
  if (angles.theta == 0.0) {
    amps(0) = 1.0;
    return DickeVector(spin, std::move(amps));
  }
  if (angles.theta == std::numbers::pi) {
    amps(n) = std::polar(1.0, -n * angles.phi);
    return DickeVector(spin, std::move(amps));
  }

  const double log_s = std::log(std::sin(0.5 * angles.theta));
  const double log_c = std::log(std::cos(0.5 * angles.theta));
  for (int k = 0; k <= n; ++k) {
    const double mag =
        std::exp(0.5 * log_binomial(n, k) + k * log_s + (n - k) * log_c);
    amps(k) = std::polar(mag, -k * angles.phi);
  }
  amps /= amps.norm();
  return DickeVector(spin, std::move(amps));
}

std::complex<double> inner_product(const DickeVector& a, const DickeVector& b) {
  if (!(a.spin == b.spin))
    throw SpinMismatch("inner_product: spins differ");
  return a.amps.dot(b.amps);
}

double overlap_law(SpinJ spin, const BlochAngles& a, const BlochAngles& b) {
  const double cos_big =
      std::cos(a.theta) * std::cos(b.theta) +
      std::sin(a.theta) * std::sin(b.theta) * std::cos(a.phi - b.phi);
  const double half_sq = std::clamp(0.5 * (1.0 + cos_big), 0.0, 1.0);
  return std::pow(half_sq, spin.two_j);
}

DickeVector rotate_phase(const DickeVector& v, double delta_phi) {
  Eigen::VectorXcd amps(v.amps.size());
  for (int i = 0; i < v.amps.size(); ++i) {
    amps(i) = v.amps(i) * std::polar(1.0, -0.5 * v.two_m(i) * delta_phi);
  }
  return DickeVector(v.spin, std::move(amps));
}

}  // namespace catwva
