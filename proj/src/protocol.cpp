#include "catwva/protocol.hpp"

#include <cmath>
#include <utility>

#include "catwva/errors.hpp"

namespace catwva {

FieldState FieldState::x_polarized() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {r, r};
}

EntangledState evolve(const ProtocolParams& params, const FieldState& field) {
  const double field_norm =
      std::norm(field.c_plus) + std::norm(field.c_minus);
  if (std::abs(field_norm - 1.0) > 1e-9)
    throw std::invalid_argument("evolve: field state not normalized");

  const DickeVector prepared = coherent_state(params.spin, params.prep);
  DickeVector plus = rotate_phase(prepared, +params.omega);
  DickeVector minus = rotate_phase(prepared, -params.omega);
  plus.amps *= field.c_plus;
  minus.amps *= field.c_minus;
  return {std::move(plus), std::move(minus)};
}

CatState postselect(const EntangledState& state, double gamma) {
  if (!(state.branch_plus.spin == state.branch_minus.spin))
    throw SpinMismatch("postselect: branch spins differ");

  // sin(gamma - pi/4) and cos(gamma - pi/4), expanded so the two weights
  // cancel exactly at gamma = 0 (where the projected state can genuinely
  // vanish when the branches coincide).
  const double sin_g = std::sin(gamma), cos_g = std::cos(gamma);
  const double w_plus = (sin_g - cos_g) / std::numbers::sqrt2;
  const double w_minus = (cos_g + sin_g) / std::numbers::sqrt2;
  Eigen::VectorXcd u =
      w_plus * state.branch_plus.amps + w_minus * state.branch_minus.amps;

  const double norm_sq = u.squaredNorm();
  if (norm_sq < 1e-300)
    throw ZeroPostselection("postselect: projected state has zero norm");

  u /= std::sqrt(norm_sq);
  return {DickeVector(state.branch_plus.spin, std::move(u)), norm_sq, norm_sq};
}

CatState make_cat(const ProtocolParams& params) {
  return postselect(evolve(params, FieldState::x_polarized()), params.gamma);
}

double success_probability(int n_atoms, double omega, double gamma) {
  if (n_atoms < 1)
    throw std::invalid_argument("success_probability: need n_atoms >= 1");
  return 0.5 * (1.0 - std::cos(2.0 * gamma) *
                          std::pow(std::cos(omega), n_atoms));
}

}  // namespace catwva
