#pragma once

#include <complex>
#include <numbers>

#include "catwva/spin_core.hpp"

namespace catwva {

/// Single-photon polarization state c_+ |1+,0-> + c_- |0+,1->.
struct FieldState {
  std::complex<double> c_plus;
  std::complex<double> c_minus;

  /// The x-polarized choice c_+ = c_- = 1/sqrt(2) used by the whole
  /// post-selection protocol.
  static FieldState x_polarized();
};

/// Everything needed to run the protocol once: spin size, prepared coherent
/// state, accumulated interaction phase Omega, and post-selection angle gamma.
struct ProtocolParams {
  SpinJ spin;
  BlochAngles prep{0.5 * std::numbers::pi, 0.0};
  double omega = 0.0;  // (-pi, pi]
  double gamma = 0.0;  // [0, pi/2] in the scans
};

/// Atom-field state after the dispersive interaction, resolved over the two
/// photon basis states.  Each branch carries its c_+- weight and the
/// e^{+-i j Omega} phase produced by the rotation.
struct EntangledState {
  DickeVector branch_plus;
  DickeVector branch_minus;
};

/// Heralded atomic cat state: normalized vector, its pre-normalization
/// squared norm (the closed-form normalization factor), and the success
/// probability of the post-selection (equal to norm_sq by the Born rule).
struct CatState {
  DickeVector vector;
  double norm_sq = 0.0;
  double success_prob = 0.0;
};

/// Entangling evolution: branch_+- = c_+- e^{+-i j Omega} |theta, phi +- Omega>,
/// realized by azimuthal rotations of the prepared state.
EntangledState evolve(const ProtocolParams& params, const FieldState& field);

/// Projection onto the post-selected polarization
/// sin(gamma - pi/4) |1+,0-> + cos(gamma - pi/4) |0+,1->.
/// Throws ZeroPostselection when the projected vector vanishes.
CatState postselect(const EntangledState& state, double gamma);

/// evolve with the x-polarized field followed by postselect at params.gamma.
CatState make_cat(const ProtocolParams& params);

/// p = (1/2)[1 - cos(2 gamma) cos^N(Omega)]; closed form of the success
/// probability for the theta = pi/2 preparation.
double success_probability(int n_atoms, double omega, double gamma);

}  // namespace catwva
