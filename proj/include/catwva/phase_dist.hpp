#pragma once

#include <numbers>

#include <Eigen/Dense>

#include "catwva/protocol.hpp"

namespace catwva {

/// P(phi) sampled over a window, together with the parameters that made it.
struct PhaseProfile {
  Eigen::VectorXd phis;
  Eigen::VectorXd values;
  ProtocolParams params;
};

/// Result of the peak scan of P(phi).
struct PeakReport {
  double left_peak_phi = 0.0;  // most negative local maximum
  double scaled_shift = 0.0;   // |left_peak_phi| / |Omega|
  int n_peaks = 0;
  bool dip_at_zero = false;    // P has a local minimum at phi = 0
};

/// Weak value of the photon Stokes operator for post-selection angle gamma.
struct WeakValueModel {
  double weak_value = 0.0;  // A = cot(gamma)

  /// First-order prediction of the peak shift, -A * Omega.
  double predicted_shift(double omega) const { return -weak_value * omega; }
};

/// Measured vs predicted peak shift, for mapping where the first-order
/// weak-value model holds.
struct TaylorShiftCheck {
  double true_shift = 0.0;       // refined left-peak location
  double predicted_shift = 0.0;  // -cot(gamma) * Omega
  double relative_error = 0.0;   // |true - predicted| / |true|
};

/// P(phi) = |<pi/2, phi | cat>|^2, evaluated against the explicit cat vector.
double phase_density(const ProtocolParams& params, double phi);

/// f(phi) = sum_m C(2j, j+m) e^{i m phi}, returned as its real value;
/// equals (2 cos(phi/2))^(2j).
double f_kernel(SpinJ spin, double phi);

/// P(phi) on n uniformly spaced nodes over [lo, hi].
PhaseProfile sample_phase(const ProtocolParams& params, double lo, double hi,
                          int n);

/// Locates all interior local maxima of P by a coarse scan followed by
/// golden-section refinement to |dphi| <= 1e-10.  Requires omega != 0;
/// throws NoPeak when the window has no interior maximum.
PeakReport find_peaks(const ProtocolParams& params,
                      double lo = -0.5 * std::numbers::pi,
                      double hi = 0.5 * std::numbers::pi,
                      int n_coarse = 20001);

/// A = cot(gamma).  Throws DivergentWeakValue outside gamma in (0, pi).
WeakValueModel weak_value(double gamma);

/// find_peaks shift against the first-order prediction -A*Omega.
TaylorShiftCheck taylor_shift_check(const ProtocolParams& params);

}  // namespace catwva
