#include "extremal/family_g.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace extremal {

namespace {

constexpr double pole_tolerance = 1e-9;

void check_common(double a, int d) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(a > 0) || !std::isfinite(a))
    throw DomainError("evaluation height a must be positive and finite");
}

void check_poles(int d, double lambda) {
  for (int j = 1; j <= d / 2; ++j)
    if (std::abs(lambda - 2.0 * d + 2.0 * j + 1.0) <= pole_tolerance)
      throw PoleError("lambda = " + std::to_string(lambda) + " hits the pole of factor j = " +
                      std::to_string(j));
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j)
    out = out * double(n - k + j) / double(j);
  return out;
}

// Ascending coefficients of (x + s)^n.
VectorXd shifted_power(int n, double s) {
  VectorXd c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = binomial(n, k) * std::pow(s, n - k);
  return c;
}

VectorXd convolve(const VectorXd &p, const VectorXd &q) {
  VectorXd out = VectorXd::Zero(p.size() + q.size() - 1);
  for (Eigen::Index i = 0; i < p.size(); ++i)
    for (Eigen::Index j = 0; j < q.size(); ++j)
      out[i + j] += p[i] * q[j];
  return out;
}

} // namespace

double pochhammer(double t, int n) {
  double out = 1.0;
  for (int j = 0; j < n; ++j)
    out *= t + double(j);
  return out;
}

double generalized_binomial(double t, int n) {
  double out = 1.0;
  for (int j = 0; j < n; ++j)
    out = out * (t - double(j)) / double(j + 1);
  return out;
}

VectorXd g_coeffs(const GFamilyParams &params) {
  check_common(params.a, params.d);
  check_poles(params.d, params.lambda);
  const int d = params.d;
  const double a2 = params.a * params.a;
  VectorXd c = VectorXd::Zero(d + 1);
  c[d] = 1.0;
  // term_k / term_{k-1} = -a^2 (d-2k+2)(d-2k+1) / (2k (lambda - 2d + 2k + 1)),
  // which folds C(d,2k) and (2k-1)!! into one running product
  double term = 1.0;
  for (int k = 1; k <= d / 2; ++k) {
    term *= -a2 * double(d - 2 * k + 2) * double(d - 2 * k + 1) /
            (2.0 * k * (params.lambda - 2.0 * d + 2.0 * k + 1.0));
    c[d - 2 * k] = term;
  }
  return c;
}

double constraint_excess(int d, double lambda) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  check_poles(d, lambda);
  double term = 1.0, sum = 0.0;
  for (int k = 1; k <= d / 2; ++k) {
    term *= double(d - 2 * k + 2) * double(d - 2 * k + 1) /
            (2.0 * k * (lambda - 2.0 * d + 2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

double solve_lambda0_log(double a, int d, double log_m) {
  check_common(a, d);
  // target 1 + excess = m / a^d
  const double log_ratio = log_m - double(d) * std::log(a);
  if (!(log_ratio > 0))
    throw RegimeError("m must exceed a^d");
  const double log_top = double(d - 1) * std::numbers::ln2;
  if (log_ratio > log_top + 1e-12)
    throw RegimeError("m exceeds 2^{d-1} a^d; the binomial family is extremal there");
  const double target = std::expm1(log_ratio);

  double lo = 2.0 * d - 2.0;
  if (constraint_excess(d, lo) <= target)
    return lo;
  double hi = 4.0 * d;
  while (constraint_excess(d, hi) >= target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw RegimeError("failed to bracket lambda_0; m is too close to a^d");
  }
  // excess is strictly decreasing: excess(lo) > target > excess(hi); bisect to
  // adjacent doubles, well inside the 1e-13 relative bracket width
  for (int it = 0; it < 4000; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi)
      break;
    if (constraint_excess(d, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  const double f_lo = constraint_excess(d, lo) - target;
  const double f_hi = constraint_excess(d, hi) - target;
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

double solve_lambda0(double a, int d, double m) {
  if (!(m > 0))
    throw RegimeError("m must be positive");
  return solve_lambda0_log(a, d, std::log(m));
}

LogDiscriminant g_disc_closed(const GFamilyParams &params) {
  check_common(params.a, params.d);
  const int d = params.d;
  const double lambda = params.lambda;
  const int ceil_half = (d + 1) / 2;
  for (int k = ceil_half; k <= d - 1; ++k)
    if (std::abs(lambda - 2.0 * k + 1.0) <= pole_tolerance)
      throw PoleError("lambda = " + std::to_string(lambda) + " is a pole of the discriminant (k = " +
                      std::to_string(k) + ")");

  LogDiscriminant out = LogDiscriminant::one();
  out.log_abs = double(d) * double(d - 1) * std::log(params.a);
  for (int k = 1; k <= d; ++k)
    out.mul_pow(double(k), k);
  for (int k = 1; k <= d / 2 - 1; ++k)
    out.mul_pow(lambda - 2.0 * k, 2 * k);
  for (int k = ceil_half; k <= d - 1; ++k)
    out.mul_pow(lambda - 2.0 * k + 1.0, -(2 * k - 1));
  return out;
}

VectorXd jacobi_coeffs(const JacobiParams &params) {
  const int d = params.d;
  if (d < 0)
    throw DomainError("Jacobi degree must be non-negative");
  VectorXd out = VectorXd::Zero(d + 1);
  for (int k = 0; k <= d; ++k) {
    const double weight = generalized_binomial(d + params.alpha, d - k) *
                          generalized_binomial(d + params.beta, k);
    if (weight == 0.0)
      continue;
    out += weight * convolve(shifted_power(k, -1.0), shifted_power(d - k, 1.0));
  }
  return std::ldexp(1.0, -d) * out;
}

VectorXd gegenbauer_coeffs(int d, double mu) {
  if (d < 0)
    throw DomainError("Gegenbauer degree must be non-negative");
  VectorXd out = VectorXd::Zero(d + 1);
  double k_fact = 1.0;
  for (int k = 0; k <= d / 2; ++k) {
    if (k > 0)
      k_fact *= double(k);
    double rest_fact = 1.0;
    for (int j = 2; j <= d - 2 * k; ++j)
      rest_fact *= double(j);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out[d - 2 * k] = sign * pochhammer(mu, d - k) / (k_fact * rest_fact) *
                     std::ldexp(1.0, d - 2 * k);
  }
  return out;
}

double jacobi_gegenbauer_residual(int d, double mu) {
  const double denom = pochhammer(2.0 * mu, d);
  if (std::abs(denom) <= 1e-14)
    throw DomainError("(2 mu)_d vanishes");
  const VectorXd jacobi = jacobi_coeffs({d, mu - 0.5, mu - 0.5});
  const VectorXd scaled = (pochhammer(mu + 0.5, d) / denom) * gegenbauer_coeffs(d, mu);
  return (jacobi - scaled).cwiseAbs().maxCoeff();
}

double g_jacobi_identity_residual(const GFamilyParams &params) {
  check_common(params.a, params.d);
  const int d = params.d;
  const double lambda = params.lambda;
  const double poch = pochhammer(lambda - 2.0 * d + 2.0, d);
  if (std::abs(poch) <= 1e-12)
    throw DomainError("(lambda - 2d + 2)_d vanishes; the Jacobi form degenerates");

  using C = std::complex<double>;
  const C i(0.0, 1.0);
  double d_fact = 1.0;
  for (int j = 2; j <= d; ++j)
    d_fact *= double(j);
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  const C constant = std::pow(2.0 * params.a * i, d) * d_fact / (sign * poch);

  const double param = -lambda / 2.0 - 1.0;
  const VectorXd jac = jacobi_coeffs({d, param, param});
  const VectorXd g = g_coeffs(params);
  const C t = -i / params.a;
  C t_pow(1.0);
  double worst = 0.0;
  for (int k = 0; k <= d; ++k) {
    worst = std::max(worst, std::abs(constant * jac[k] * t_pow - C(g[k])));
    t_pow *= t;
  }
  return worst / g.cwiseAbs().maxCoeff();
}

LogDiscriminant jacobi_disc(const JacobiParams &params) {
  const int d = params.d;
  if (d < 2)
    throw DomainError("Jacobi discriminant needs degree >= 2");
  const double ab = params.alpha + params.beta;
  for (int k = 1; k <= d; ++k)
    if (std::abs(ab + d + k) <= 1e-12)
      throw DomainError("alpha + beta = -d - " + std::to_string(k) + " is excluded");

  LogDiscriminant out = LogDiscriminant::one();
  out.log_abs = -double(d) * double(d - 1) * std::numbers::ln2;
  for (int k = 1; k <= d; ++k) {
    out.mul_pow(double(k), k - 2 * d + 2);
    out.mul_pow(k + params.alpha, k - 1);
    out.mul_pow(k + params.beta, k - 1);
    out.mul_pow(d + k + ab, d - k);
  }
  return out;
}

VectorXd degenerate_family_coeffs(int d, int K, double cK) {
  if (d < 3 || K < 0 || K > d - 3 || (d - K) % 2 == 0)
    throw DomainError("degenerate family needs 0 <= K <= d-3 with d - K odd");
  VectorXd c = VectorXd::Zero(d + 1);
  c[d] = 1.0;
  double prod = 1.0;
  for (int k = 1; k <= d / 2; ++k) {
    prod *= double(2 * k - 1) / double(d - K - 2 * k);
    c[d - 2 * k] = binomial(d, 2 * k) * prod;
  }
  c[K] = cK;
  prod = 1.0;
  for (int k = 1; k <= K / 2; ++k) {
    prod *= double(2 * k - 1) / double(d - K + 2 * k);
    c[K - 2 * k] = ((k % 2 == 0) ? 1.0 : -1.0) * binomial(K, 2 * k) * prod * cK;
  }
  return c;
}

int descartes_real_root_bound(const VectorXd &coeffs) {
  Eigen::Index zero_mult = 0;
  while (zero_mult < coeffs.size() && coeffs[zero_mult] == 0.0)
    ++zero_mult;
  auto sign_changes = [&](bool negate_odd) {
    int changes = 0, prev = 0;
    for (Eigen::Index k = zero_mult; k < coeffs.size(); ++k) {
      double c = coeffs[k];
      if (negate_odd && k % 2 == 1)
        c = -c;
      if (c == 0.0)
        continue;
      const int s = c > 0 ? 1 : -1;
      if (prev != 0 && s != prev)
        ++changes;
      prev = s;
    }
    return changes;
  };
  return sign_changes(false) + sign_changes(true) + int(zero_mult);
}

} // namespace extremal
