#pragma once

#include <Eigen/Dense>

namespace catwva {

/// Nodes and weights of a quadrature rule on [-1, 1], nodes ascending.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree <= 2n-1.
/// Computed by the Golub-Welsch eigenvalue method on the Jacobi matrix.
QuadratureRule gauss_legendre(int n);

}  // namespace catwva
