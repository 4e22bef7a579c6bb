#include "catwva/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "catwva/errors.hpp"

namespace catwva {

namespace {

// 4*j_max + 8 covers every factorial the Racah sum and the multipole kernels
// request up to j = 5000; anything larger falls through to lgamma.
constexpr int kLogFactorialCap = 20008;

const std::vector<long double>& log_factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kLogFactorialCap + 1, 0.0L);
    for (int n = 1; n <= kLogFactorialCap; ++n) {
      t[n] = t[n - 1] + std::log(static_cast<long double>(n));
    }
    return t;
  }();
  return table;
}

// Doubled quantities are halved on lookup; the caller guarantees evenness.
long double lf2(int doubled) { return detail::log_factorial_ld(doubled / 2); }

}  // namespace

namespace detail {

long double log_factorial_ld(int n) {
  const auto& t = log_factorial_table();
  if (n < static_cast<int>(t.size())) return t[n];
  return std::lgamma(static_cast<long double>(n) + 1.0L);
}

}  // namespace detail

double log_factorial(int n) {
  if (n < 0) throw InvalidAngularMomentum("log_factorial: negative argument");
  return static_cast<double>(detail::log_factorial_ld(n));
}

double log_binomial(int n, int k) {
  if (n < 0) throw InvalidAngularMomentum("log_binomial: negative n");
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(detail::log_factorial_ld(n) -
                             detail::log_factorial_ld(k) -
                             detail::log_factorial_ld(n - k));
}

double binomial(int n, int k) {
  if (n < 0) throw InvalidAngularMomentum("binomial: negative n");
  if (k < 0 || k > n) return 0.0;
  const long double lb = detail::log_factorial_ld(n) -
                         detail::log_factorial_ld(k) -
                         detail::log_factorial_ld(n - k);
  return static_cast<double>(std::exp(lb));
}

double wigner_3j(const ThreeJArgs& a) {
  const int tj[3] = {a.two_j1, a.two_j2, a.two_j3};
  const int tm[3] = {a.two_m1, a.two_m2, a.two_m3};
  for (int i = 0; i < 3; ++i) {
    if (tj[i] < 0) throw InvalidAngularMomentum("wigner_3j: negative j");
    if (std::abs(tm[i]) > tj[i])
      throw InvalidAngularMomentum("wigner_3j: |m| > j");
    if ((tj[i] + tm[i]) % 2 != 0)
      throw InvalidAngularMomentum("wigner_3j: mixed integer/half-integer j, m");
  }

  // Selection rules give exact zeros.
  if (tm[0] + tm[1] + tm[2] != 0) return 0.0;
  if ((tj[0] + tj[1] + tj[2]) % 2 != 0) return 0.0;  // perimeter not integer
  if (tj[2] < std::abs(tj[0] - tj[1]) || tj[2] > tj[0] + tj[1]) return 0.0;

  // Racah single-sum formula.  All combinations below are even by the
  // selection rules, so they halve to exact integers.
  const int t1 = tj[0] + tj[1] - tj[2];
  const int t2 = tj[0] - tj[1] + tj[2];
  const int t3 = -tj[0] + tj[1] + tj[2];
  const int jpm1 = tj[0] + tm[0], jmm1 = tj[0] - tm[0];
  const int jpm2 = tj[1] + tm[1], jmm2 = tj[1] - tm[1];
  const int jpm3 = tj[2] + tm[2], jmm3 = tj[2] - tm[2];
  const int x = tj[2] - tj[1] + tm[0];  // 2(j3 - j2 + m1)
  const int y = tj[2] - tj[0] - tm[1];  // 2(j3 - j1 - m2)

  const long double log_pref =
      0.5L * (lf2(t1) + lf2(t2) + lf2(t3) -
              detail::log_factorial_ld((tj[0] + tj[1] + tj[2]) / 2 + 1) +
              lf2(jpm1) + lf2(jmm1) + lf2(jpm2) + lf2(jmm2) + lf2(jpm3) +
              lf2(jmm3));

  const int k_lo = std::max({0, -x / 2, -y / 2});
  const int k_hi = std::min({t1 / 2, jmm1 / 2, jpm2 / 2});
  if (k_lo > k_hi) return 0.0;

  // Alternating sum scaled by its largest term to keep exponents tame.
  long double max_neg_den = -std::numeric_limits<long double>::infinity();
  std::vector<long double> neg_den(k_hi - k_lo + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double den =
        detail::log_factorial_ld(k) + detail::log_factorial_ld(t1 / 2 - k) +
        detail::log_factorial_ld(jmm1 / 2 - k) +
        detail::log_factorial_ld(jpm2 / 2 - k) +
        detail::log_factorial_ld(x / 2 + k) +
        detail::log_factorial_ld(y / 2 + k);
    neg_den[k - k_lo] = -den;
    max_neg_den = std::max(max_neg_den, -den);
  }
  long double sum = 0.0L;
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double term = std::exp(neg_den[k - k_lo] - max_neg_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  if (sum == 0.0L) return 0.0;

  const int phase_exp = (tj[0] - tj[1] - tm[2]) / 2;
  const long double sign = (((phase_exp % 2) + 2) % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(sign * sum * std::exp(log_pref + max_neg_den));
}

void normalized_legendre_sequence(int order, int k_max, double x,
                                  std::span<double> out) {
  if (order < 0 || k_max < order)
    throw InvalidOrder("normalized_legendre_sequence: need 0 <= order <= k_max");
  if (out.size() < static_cast<std::size_t>(k_max - order + 1))
    throw InvalidOrder("normalized_legendre_sequence: output span too short");

  // Seed Pbar_Q^Q built as a running product so (1-x^2)^(Q/2) never
  // overflows; the Condon-Shortley sign lives here.
  double pmm = 1.0;
  if (order > 0) {
    const double omx2 = (1.0 - x) * (1.0 + x);
    double fact = 1.0;
    for (int i = 1; i <= order; ++i) {
      pmm *= omx2 * fact / (fact + 1.0);
      fact += 2.0;
    }
  }
  pmm = std::sqrt((2.0 * order + 1.0) * pmm / (4.0 * std::numbers::pi));
  if (order % 2 == 1) pmm = -pmm;
  out[0] = pmm;
  if (k_max == order) return;

  double pkm1 = pmm;
  double pk = x * std::sqrt(2.0 * order + 3.0) * pmm;
  out[1] = pk;
  double oldfact = std::sqrt(2.0 * order + 3.0);
  for (int k = order + 2; k <= k_max; ++k) {
    const double fact = std::sqrt((4.0 * k * k - 1.0) /
                                  (static_cast<double>(k) * k -
                                   static_cast<double>(order) * order));
    const double pkp1 = (x * pk - pkm1 / oldfact) * fact;
    oldfact = fact;
    pkm1 = pk;
    pk = pkp1;
    out[k - order] = pkp1;
  }
}

std::complex<double> spherical_harmonic(const SphericalIndex& idx) {
  const int k = idx.degree;
  const int q = idx.order;
  if (k < 0 || std::abs(q) > k)
    throw InvalidOrder("spherical_harmonic: need |Q| <= K");
  const int aq = std::abs(q);
  const double x = std::cos(idx.alpha);

  std::vector<double> seq(k - aq + 1);
  normalized_legendre_sequence(aq, k, x, seq);
  const double p = seq.back();

  const std::complex<double> y =
      p * std::complex<double>(std::cos(aq * idx.beta), std::sin(aq * idx.beta));
  if (q >= 0) return y;
  return (aq % 2 == 1) ? -std::conj(y) : std::conj(y);
}

}  // namespace catwva
