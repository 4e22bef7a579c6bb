#pragma once

#include <complex>
#include <span>

namespace catwva {

/// Arguments of a Wigner 3j symbol.  Angular momenta and projections are
/// stored doubled (two_j = 2j, two_m = 2m) so half-integer spins keep exact
/// integer arithmetic in the selection rules.
struct ThreeJArgs {
  int two_j1 = 0, two_j2 = 0, two_j3 = 0;
  int two_m1 = 0, two_m2 = 0, two_m3 = 0;
};

/// Convenience builder for all-integer angular momenta.
constexpr ThreeJArgs three_j_int(int j1, int j2, int j3, int m1, int m2, int m3) {
  return {2 * j1, 2 * j2, 2 * j3, 2 * m1, 2 * m2, 2 * m3};
}

/// Index and evaluation point of a spherical harmonic Y_KQ(alpha, beta).
struct SphericalIndex {
  int degree = 0;      // K >= 0
  int order = 0;       // Q with |Q| <= K
  double alpha = 0.0;  // polar angle, radians in [0, pi]
  double beta = 0.0;   // azimuthal angle, radians
};

/// ln(n!).  Backed by a table built once on first use (thread-safe);
/// arguments beyond the table fall back to lgamma.
double log_factorial(int n);

/// ln C(n, k); -inf when k is outside [0, n].
double log_binomial(int n, int k);

/// Binomial coefficient C(n, k) through the log-factorial table.
/// Returns 0 for k < 0 or k > n.
double binomial(int n, int k);

/// Wigner 3j symbol by the Racah single-sum formula, evaluated in log space
/// with sign tracking so that large angular momenta do not overflow.
/// Returns exactly 0 when a selection rule fails.  Throws
/// InvalidAngularMomentum when |m| > j or the integer/half-integer character
/// of (j, m) is inconsistent.
double wigner_3j(const ThreeJArgs& args);

/// Orthonormal spherical harmonic with the Condon-Shortley phase,
/// Y_{K,-Q} = (-1)^Q conj(Y_{KQ}).  Throws InvalidOrder when |Q| > K.
std::complex<double> spherical_harmonic(const SphericalIndex& idx);

/// Fully normalized associated Legendre functions at fixed order, increasing
/// degree: writes Pbar_K^Q(x) into out[K - order] for K = order..k_max, with
/// Y_KQ(alpha, beta) = Pbar_K^Q(cos alpha) e^{iQ beta} for Q = order >= 0.
/// The recurrence starts from the stable seed at K = Q and is usable to
/// degrees of several hundred.
void normalized_legendre_sequence(int order, int k_max, double x,
                                  std::span<double> out);

namespace detail {
/// Extended-precision ln(n!) used by the Racah sum internally.
long double log_factorial_ld(int n);
}  // namespace detail

}  // namespace catwva
