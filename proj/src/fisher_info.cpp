#include "catwva/fisher_info.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "catwva/errors.hpp"
#include "catwva/protocol.hpp"

namespace catwva {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kQuarterPi = 0.25 * std::numbers::pi;

ProtocolParams standard_params(int n_atoms, double omega, double gamma) {
  if (n_atoms < 1) throw std::invalid_argument("fisher: need n_atoms >= 1");
  return {SpinJ{n_atoms}, BlochAngles{kHalfPi, 0.0}, omega, gamma};
}

// Both photon branches stacked into one vector of length 2(2j+1).
Eigen::VectorXcd joint_vector(int n_atoms, double omega) {
  const EntangledState state =
      evolve(standard_params(n_atoms, omega, 0.0), FieldState::x_polarized());
  Eigen::VectorXcd v(2 * (n_atoms + 1));
  v << state.branch_plus.amps, state.branch_minus.amps;
  return v;
}

Eigen::VectorXcd cat_vector(int n_atoms, double omega, double gamma) {
  return make_cat(standard_params(n_atoms, omega, gamma)).vector.amps;
}

// QFI of the ray of an unnormalized smooth family u(Omega), given u and its
// exact derivative du.
double qfi_from_unnormalized(const Eigen::VectorXcd& u,
                             const Eigen::VectorXcd& du) {
  const double p = u.squaredNorm();
  const std::complex<double> overlap = u.dot(du);
  const double p_prime = 2.0 * overlap.real();
  return 4.0 * (du.squaredNorm() / p - p_prime * p_prime / (4.0 * p * p) -
                overlap.imag() * overlap.imag() / (p * p));
}

// QFI of a normalized smooth family by central differences.
double qfi_central_difference(const Eigen::VectorXcd& at,
                              const Eigen::VectorXcd& plus,
                              const Eigen::VectorXcd& minus, double step) {
  const Eigen::VectorXcd d = (plus - minus) / (2.0 * step);
  return 4.0 * (d.squaredNorm() - std::norm(at.dot(d)));
}

}  // namespace

double qfi_joint(int n_atoms) {
  if (n_atoms < 1) throw std::invalid_argument("qfi_joint: need n_atoms >= 1");
  return static_cast<double>(n_atoms);
}

double qfi_postselected(int n_atoms, double omega, double gamma) {
  const double p = success_probability(n_atoms, omega, gamma);
  if (p <= 1e-300)
    throw ZeroPostselection("qfi_postselected: success probability is zero");

  const double c = std::cos(omega);
  const double s2 = std::sin(omega) * std::sin(omega);
  const double c2g = std::cos(2.0 * gamma);
  const double c_nm2 = std::pow(c, n_atoms - 2);
  const double half_n_over_p = 0.5 * n_atoms / p;
  return half_n_over_p *
         (1.0 + c2g * c_nm2 * (1.0 - n_atoms * s2) -
          half_n_over_p * c2g * c2g * c_nm2 * c_nm2 * c * c * s2);
}

double classical_fisher_post(int n_atoms, double omega, double gamma) {
  const double p = success_probability(n_atoms, omega, gamma);
  if (p <= 0.0 || p >= 1.0)
    throw DegenerateBernoulli("classical_fisher_post: p is 0 or 1");

  const double c = std::cos(omega);
  const double s2 = std::sin(omega) * std::sin(omega);
  const double c2g = std::cos(2.0 * gamma);
  const double numerator = static_cast<double>(n_atoms) * n_atoms * c2g *
                           c2g * std::pow(c, 2 * n_atoms - 2) * s2;
  const double denominator = 1.0 - c2g * c2g * std::pow(c, 2 * n_atoms);
  if (denominator <= 0.0)
    throw DegenerateBernoulli("classical_fisher_post: degenerate denominator");
  return numerator / denominator;
}

FisherReport fisher_report(int n_atoms, double omega, double gamma) {
  FisherReport report;
  report.n_atoms = n_atoms;
  report.omega = omega;
  report.gamma = gamma;
  report.i_joint = qfi_joint(n_atoms);
  report.i_postselected = qfi_postselected(n_atoms, omega, gamma);
  report.p = success_probability(n_atoms, omega, gamma);
  report.f_post = classical_fisher_post(n_atoms, omega, gamma);
  return report;
}

InformationBudget information_budget(int n_atoms, double omega, double gamma) {
  const FisherReport report = fisher_report(n_atoms, omega, gamma);
  InformationBudget budget;
  budget.p_times_i = report.p * report.i_postselected;
  budget.f_post = report.f_post;
  budget.total = budget.p_times_i + budget.f_post;
  budget.i_joint = report.i_joint;
  if (budget.p_times_i > budget.i_joint + 1e-9 ||
      budget.f_post > budget.i_joint + 1e-9)
    throw std::logic_error(
        "information_budget: a single channel exceeded the joint QFI");
  return budget;
}

double qfi_joint_numeric(int n_atoms, double omega, double step) {
  return qfi_central_difference(joint_vector(n_atoms, omega),
                                joint_vector(n_atoms, omega + step),
                                joint_vector(n_atoms, omega - step), step);
}

double qfi_postselected_numeric(int n_atoms, double omega, double gamma,
                                double step) {
  return qfi_central_difference(cat_vector(n_atoms, omega, gamma),
                                cat_vector(n_atoms, omega + step, gamma),
                                cat_vector(n_atoms, omega - step, gamma),
                                step);
}

double qfi_postselected_exact_derivative(int n_atoms, double omega,
                                         double gamma) {
  const ProtocolParams params = standard_params(n_atoms, omega, gamma);
  const DickeVector prepared = coherent_state(params.spin, params.prep);
  const double w_plus = std::sin(gamma - kQuarterPi) / std::numbers::sqrt2;
  const double w_minus = std::cos(gamma - kQuarterPi) / std::numbers::sqrt2;

  const int n = params.spin.two_j;
  Eigen::VectorXcd u(n + 1), du(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double m = 0.5 * (2 * i - n);
    const std::complex<double> forward = std::polar(1.0, -m * omega);
    const std::complex<double> backward = std::conj(forward);
    const std::complex<double> im(0.0, m);
    u(i) = prepared.amps(i) * (w_plus * forward + w_minus * backward);
    du(i) = prepared.amps(i) * (-im * w_plus * forward + im * w_minus * backward);
  }
  if (u.squaredNorm() <= 1e-300)
    throw ZeroPostselection("qfi_postselected_exact_derivative: zero norm");
  return qfi_from_unnormalized(u, du);
}

double classical_fisher_post_numeric(int n_atoms, double omega, double gamma,
                                     double step) {
  const auto p_of = [&](double w) {
    return make_cat(standard_params(n_atoms, w, gamma)).norm_sq;
  };
  const double p = p_of(omega);
  if (p <= 0.0 || p >= 1.0)
    throw DegenerateBernoulli("classical_fisher_post_numeric: p is 0 or 1");
  const double dp = (p_of(omega + step) - p_of(omega - step)) / (2.0 * step);
  return dp * dp / p + dp * dp / (1.0 - p);
}

}  // namespace catwva
