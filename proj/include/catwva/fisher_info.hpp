#pragma once

#include <Eigen/Dense>

namespace catwva {

/// Fisher quantities of the protocol at one parameter point, for the
/// theta = pi/2, phi = 0, x-polarized preparation.
struct FisherReport {
  int n_atoms = 0;
  double omega = 0.0;
  double gamma = 0.0;
  double i_joint = 0.0;         // QFI of the entangled atom-field state
  double i_postselected = 0.0;  // QFI of the heralded cat state
  double p = 0.0;               // post-selection success probability
  double f_post = 0.0;          // classical Fisher info of the success statistics
};

/// Split of the per-trial information budget between the heralded state and
/// the post-selection statistics.
struct InformationBudget {
  double p_times_i = 0.0;
  double f_post = 0.0;
  double total = 0.0;  // p_times_i + f_post, reported but not asserted
  double i_joint = 0.0;
};

/// QFI of the entangled state: N for this preparation.
double qfi_joint(int n_atoms);

/// Closed-form QFI of the heralded cat state.  Throws ZeroPostselection
/// when the success probability vanishes.
double qfi_postselected(int n_atoms, double omega, double gamma);

/// Classical Fisher information of the success/failure Bernoulli trial:
///   N^2 cos^2(2 gamma) cos^(2N-2)(Omega) sin^2(Omega)
///   / [1 - cos^2(2 gamma) cos^(2N)(Omega)].
/// Throws DegenerateBernoulli when p is exactly 0 or 1.
double classical_fisher_post(int n_atoms, double omega, double gamma);

/// All four quantities at one parameter point.
FisherReport fisher_report(int n_atoms, double omega, double gamma);

/// Budget (p*I, F_p, p*I + F_p, N).  Checks p*I <= N and F_p <= N (each
/// channel cannot exceed the joint QFI); the sum is reported, not asserted.
InformationBudget information_budget(int n_atoms, double omega, double gamma);

// ---- verification routes ------------------------------------------------
// Generic pure-state QFI 4[<dpsi|dpsi> - |<psi|dpsi>|^2] applied to the
// explicitly constructed states, with the Omega-derivative taken either
// exactly (each amplitude carries e^{+-imOmega} factors) or by central
// differences.  These exist so the closed forms above can be checked
// against an independent route.

/// QFI of the joint entangled vector by central differences in Omega.
double qfi_joint_numeric(int n_atoms, double omega, double step = 1e-5);

/// QFI of the normalized cat vector by central differences in Omega.
double qfi_postselected_numeric(int n_atoms, double omega, double gamma,
                                double step = 1e-5);

/// QFI of the normalized cat vector with the exact amplitude derivative.
double qfi_postselected_exact_derivative(int n_atoms, double omega,
                                         double gamma);

/// Two-outcome classical Fisher information with dp/dOmega by central
/// differences on the vector-route success probability.
double classical_fisher_post_numeric(int n_atoms, double omega, double gamma,
                                     double step = 1e-6);

}  // namespace catwva
