#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "catwva/spin_core.hpp"

namespace catwva {

/// State-multipole expectation values <T_KQ^dag> of a pure state,
/// K = 0..2j, -K <= Q <= K.
struct MultipoleDecomposition {
  SpinJ spin;
  std::vector<Eigen::VectorXcd> coeffs;  // coeffs[K](Q + K)

  std::complex<double> coeff(int k, int q) const { return coeffs[k](q + k); }
};

/// W(alpha, beta) sampled on a product grid: Gauss-Legendre in cos(alpha)
/// (sin(alpha) d(alpha) absorbed into the weights) times uniform beta nodes.
struct WignerField {
  Eigen::VectorXd alphas;         // ascending polar nodes in (0, pi)
  Eigen::VectorXd alpha_weights;  // Gauss-Legendre weights in cos(alpha)
  Eigen::VectorXd betas;          // uniform nodes in [0, 2pi)
  double beta_weight = 0.0;       // 2pi / n_beta
  Eigen::MatrixXd values;         // n_alpha x n_beta
  double max_imag_residual = 0.0; // largest |Im| discarded while sampling
};

/// <j,m1|T_KQ|j,m2> = (-1)^(j-m1) sqrt(2K+1) * 3j(j K j; -m1 Q m2);
/// zero unless Q = m1 - m2.  Projections are passed doubled.
double multipole_matrix_element(SpinJ spin, int k, int q, int two_m1,
                                int two_m2);

/// coeffs[K][Q] = sum_{m1,m2} conj(a_m1) a_m2 <j,m1|T_KQ^dag|j,m2>.
/// Throws NotNormalized when ||state|| deviates from 1 by more than 1e-8.
MultipoleDecomposition decompose(const DickeVector& state);

/// W(alpha, beta) = sqrt((2j+1)/4pi) sum_KQ coeff(K,Q) Y_KQ(alpha, beta);
/// the imaginary residue of the assembled sum is discarded.
double wigner_at(const MultipoleDecomposition& decomp, double alpha,
                 double beta);

/// Samples W on a grid able to integrate the degree-2j harmonic content
/// exactly.  Requires n_alpha >= 2j+2 and n_beta >= 4j+2 (GridTooCoarse
/// otherwise).
WignerField sample_grid(const MultipoleDecomposition& decomp, int n_alpha,
                        int n_beta);

/// Quadrature of W sin(alpha) over the sphere (1 for any normalized state).
double sphere_integral(const WignerField& field);

/// Quadrature of max(0, -W) sin(alpha); zero iff W >= 0 on the whole grid.
double negativity_volume(const WignerField& field);

namespace detail {
/// Assembled multipole sum before the imaginary residue is discarded.
std::complex<double> wigner_sum(const MultipoleDecomposition& decomp,
                                double alpha, double beta);
}  // namespace detail

}  // namespace catwva
