#include "catwva/wigner_dist.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "catwva/errors.hpp"
#include "catwva/quadrature.hpp"
#include "catwva/specfun.hpp"

namespace catwva {

namespace {

double parity_sign(int exponent) {
  return (((exponent % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

double multipole_matrix_element(SpinJ spin, int k, int q, int two_m1,
                                int two_m2) {
  const int n = spin.two_j;
  if (std::abs(two_m1) > n || std::abs(two_m2) > n)
    throw InvalidAngularMomentum("multipole_matrix_element: |m| > j");
  const double three_j =
      wigner_3j({n, 2 * k, n, -two_m1, 2 * q, two_m2});
  return parity_sign((n - two_m1) / 2) * std::sqrt(2.0 * k + 1.0) * three_j;
}

MultipoleDecomposition decompose(const DickeVector& state) {
  const double norm = state.amps.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw NotNormalized("decompose: state norm deviates from 1");

  const int n = state.spin.two_j;
  MultipoleDecomposition d{state.spin, {}};
  d.coeffs.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(2 * k + 1);
    for (int q = 0; q <= k; ++q) {
      // <m1|T_KQ^dag|m2> = <m2|T_KQ|m1>, nonzero only for m2 = m1 + Q.
      std::complex<double> acc = 0.0;
      for (int i1 = 0; i1 <= n; ++i1) {
        const int i2 = i1 + q;
        if (i2 < 0 || i2 > n) continue;
        const int two_m1 = 2 * i1 - n;
        const int two_m2 = two_m1 + 2 * q;
        const double element =
            multipole_matrix_element(state.spin, k, q, two_m2, two_m1);
        if (element == 0.0) continue;
        acc += std::conj(state.amps(i1)) * state.amps(i2) * element;
      }
      row(q + k) = acc;
      // Hermiticity of the density operator pins the negative orders; using
      // it keeps the assembled W real to rounding instead of to the accuracy
      // of two separately summed 3j series.
      if (q > 0) row(-q + k) = parity_sign(q) * std::conj(acc);
    }
    d.coeffs.push_back(std::move(row));
  }
  return d;
}

namespace detail {

std::complex<double> wigner_sum(const MultipoleDecomposition& decomp,
                                double alpha, double beta) {
  const int n = decomp.spin.two_j;
  const double x = std::cos(alpha);
  std::vector<double> legendre(n + 1);

  std::complex<double> total = 0.0;
  for (int q = 0; q <= n; ++q) {
    normalized_legendre_sequence(q, n, x,
                                 std::span(legendre).first(n - q + 1));
    std::complex<double> sum_pos = 0.0;
    std::complex<double> sum_neg = 0.0;
    for (int k = q; k <= n; ++k) {
      const double p = legendre[k - q];
      sum_pos += decomp.coeff(k, q) * p;
      if (q > 0) sum_neg += decomp.coeff(k, -q) * p;
    }
    const std::complex<double> phase(std::cos(q * beta), std::sin(q * beta));
    total += sum_pos * phase;
    if (q > 0) total += sum_neg * parity_sign(q) * std::conj(phase);
  }
  return std::sqrt((n + 1) / (4.0 * std::numbers::pi)) * total;
}

}  // namespace detail

double wigner_at(const MultipoleDecomposition& decomp, double alpha,
                 double beta) {
  return detail::wigner_sum(decomp, alpha, beta).real();
}

WignerField sample_grid(const MultipoleDecomposition& decomp, int n_alpha,
                        int n_beta) {
  const int n = decomp.spin.two_j;
  if (n_alpha < n + 2)
    throw GridTooCoarse("sample_grid: need n_alpha >= 2j+2");
  if (n_beta < 2 * n + 2)
    throw GridTooCoarse("sample_grid: need n_beta >= 4j+2");

  const QuadratureRule rule = gauss_legendre(n_alpha);

  WignerField field;
  field.alphas.resize(n_alpha);
  field.alpha_weights.resize(n_alpha);
  // Nodes ascend in x = cos(alpha); flip so alpha ascends.
  for (int i = 0; i < n_alpha; ++i) {
    field.alphas(i) = std::acos(rule.nodes(n_alpha - 1 - i));
    field.alpha_weights(i) = rule.weights(n_alpha - 1 - i);
  }
  field.betas.resize(n_beta);
  for (int b = 0; b < n_beta; ++b)
    field.betas(b) = 2.0 * std::numbers::pi * b / n_beta;
  field.beta_weight = 2.0 * std::numbers::pi / n_beta;
  field.values.resize(n_alpha, n_beta);

  const double prefactor = std::sqrt((n + 1) / (4.0 * std::numbers::pi));
  std::vector<double> legendre(n + 1);
  std::vector<std::complex<double>> g_pos(n + 1), g_neg(n + 1);

  double max_imag = 0.0;
  for (int i = 0; i < n_alpha; ++i) {
    const double x = std::cos(field.alphas(i));
    for (int q = 0; q <= n; ++q) {
      normalized_legendre_sequence(q, n, x,
                                   std::span(legendre).first(n - q + 1));
      std::complex<double> pos = 0.0, neg = 0.0;
      for (int k = q; k <= n; ++k) {
        const double p = legendre[k - q];
        pos += decomp.coeff(k, q) * p;
        if (q > 0) neg += decomp.coeff(k, -q) * p;
      }
      g_pos[q] = pos;
      g_neg[q] = (q > 0) ? neg * parity_sign(q) : 0.0;
    }
    for (int b = 0; b < n_beta; ++b) {
      const double beta = field.betas(b);
      const std::complex<double> step(std::cos(beta), std::sin(beta));
      std::complex<double> phase = step;
      std::complex<double> total = g_pos[0];
      for (int q = 1; q <= n; ++q) {
        total += g_pos[q] * phase + g_neg[q] * std::conj(phase);
        phase *= step;
      }
      total *= prefactor;
      field.values(i, b) = total.real();
      max_imag = std::max(max_imag, std::abs(total.imag()));
    }
  }
  field.max_imag_residual = max_imag;
  return field;
}

double sphere_integral(const WignerField& field) {
  return (field.alpha_weights.transpose() * field.values).sum() *
         field.beta_weight;
}

double negativity_volume(const WignerField& field) {
  const Eigen::MatrixXd negative_part =
      (-field.values).cwiseMax(Eigen::MatrixXd::Zero(field.values.rows(),
                                                     field.values.cols()));
  return (field.alpha_weights.transpose() * negative_part).sum() *
         field.beta_weight;
}

}  // namespace catwva
