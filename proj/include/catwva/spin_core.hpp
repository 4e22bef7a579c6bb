#pragma once

#include <complex>

#include <Eigen/Dense>

namespace catwva {

/// Collective spin quantum number, stored doubled: two_j = N where N is the
/// number of atoms, j = N/2.
struct SpinJ {
  int two_j = 1;

  constexpr int n_atoms() const { return two_j; }
  constexpr int dim() const { return two_j + 1; }
  constexpr double j() const { return 0.5 * two_j; }
  friend constexpr bool operator==(SpinJ, SpinJ) = default;
};

/// Point on the Bloch sphere.  phi is stored unreduced so signed small
/// angles near zero survive arithmetic; reduce mod 2pi only on comparison.
struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;
};

/// Complex amplitudes over the Dicke basis |j, m>, m = -j..+j.
/// amps(i) multiplies the state with two_m = 2i - two_j.
struct DickeVector {
  SpinJ spin;
  Eigen::VectorXcd amps;

  DickeVector(SpinJ s, Eigen::VectorXcd a);

  int two_m(int i) const { return 2 * i - spin.two_j; }
  double squared_norm() const { return amps.squaredNorm(); }
};

/// Atomic coherent state |theta, phi>: amplitudes
///   C(2j, j+m)^(1/2) sin^(j+m)(theta/2) cos^(j-m)(theta/2) e^{-i(j+m)phi},
/// assembled in log space so j = 50 near the poles does not underflow.
DickeVector coherent_state(SpinJ spin, const BlochAngles& angles);

/// sum_m conj(a_m) b_m.  Throws SpinMismatch when dimensions differ.
std::complex<double> inner_product(const DickeVector& a, const DickeVector& b);

/// |<theta,phi|theta',phi'>|^2 = (cos^2(Theta/2))^(2j) with Theta the angle
/// between the two Bloch directions.
double overlap_law(SpinJ spin, const BlochAngles& a, const BlochAngles& b);

/// Azimuthal rotation e^{-i delta_phi J_z}: amps'[m] = amps[m] e^{-i m delta_phi}.
/// Takes |theta, phi> to e^{+i j delta_phi} |theta, phi + delta_phi>.
DickeVector rotate_phase(const DickeVector& v, double delta_phi);

}  // namespace catwva
