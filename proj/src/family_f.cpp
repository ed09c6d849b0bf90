#include "extremal/family_f.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace extremal {

namespace {

constexpr double regime_slack = 1e-12;

void check_common(double a, int d) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(a > 0) || !std::isfinite(a))
    throw DomainError("evaluation height a must be positive and finite");
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j)
    out = out * double(n - k + j) / double(j);
  return out;
}

} // namespace

PValue p_value_log(double a, int d, double log_D) {
  check_common(a, d);
  const double dd = d;
  const double log_p = 0.5 * dd * std::log(a) + (0.5 * dd - 1.0) * std::numbers::ln2 +
                       dd / (2.0 * dd - 2.0) * std::log(dd) - log_D / (2.0 * dd - 2.0);
  const double p = std::exp(log_p);
  if (p > 1.0 + regime_slack)
    throw RegimeError("p(a, d, D) = " + std::to_string(p) +
                      " exceeds 1: a is above the small-a threshold");
  return {std::min(p, 1.0)};
}

PValue p_value(double a, int d, double D) {
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  return p_value_log(a, d, std::log(D));
}

double gamma_from_p(int d, double p) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(p > 0) || p > 1.0 + regime_slack)
    throw RegimeError("p must lie in (0, 1]");
  p = std::min(p, 1.0);
  return (d % 2 == 1 ? std::acos(p) : std::asin(p)) / double(d);
}

double gamma_value(double a, int d, double D) { return gamma_from_p(d, p_value(a, d, D).p); }

double b_from_p(double a, int d, double p) {
  check_common(a, d);
  if (!(p > 0) || p > 1.0 + regime_slack)
    throw RegimeError("p must lie in (0, 1]");
  p = std::min(p, 1.0);
  // p^{-2} - 1 = (1 - p)(1 + p) / p^2, without cancellation near p = 1
  const double radicand = (1.0 - p) * (1.0 + p) / (p * p);
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  return sign * a * double(d) * std::sqrt(std::max(radicand, 0.0));
}

double b_value(double a, int d, double D) {
  check_common(a, d);
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  // radicand a^{-d} 2^{2-d} d^{-d/(d-1)} D^{1/(d-1)} - 1, formed in log space
  const double dd = d;
  const double log_r = -dd * std::log(a) + (2.0 - dd) * std::numbers::ln2 -
                       dd / (dd - 1.0) * std::log(dd) + std::log(D) / (dd - 1.0);
  const double radicand = std::expm1(log_r);
  if (radicand < -regime_slack)
    throw RegimeError("negative radicand in B(a, d, D): a is above the small-a threshold");
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  return sign * a * dd * std::sqrt(std::max(radicand, 0.0));
}

double b_from_gamma(double a, int d, double gamma) {
  const double theta = double(d) * (std::numbers::pi / 2.0 + gamma);
  return a * double(d) * std::cos(theta) / std::sin(theta);
}

FFamilyParams f_params_log(double a, int d, double log_D) {
  const double p = p_value_log(a, d, log_D).p;
  return {a, d, b_from_p(a, d, p), gamma_from_p(d, p)};
}

FFamilyParams f_params(double a, int d, double D) {
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  return f_params_log(a, d, std::log(D));
}

VectorXd f_coeffs(const FFamilyParams &params) {
  check_common(params.a, params.d);
  const int d = params.d;
  const double a = params.a;
  // x^{d-n} coefficient: C(d,n) Re[(ad - Bi)(ai)^n] / (ad)
  VectorXd c = VectorXd::Zero(d + 1);
  double a_pow = 1.0;
  for (int n = 0; n <= d; ++n) {
    const double sign = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
    const double factor = (n % 2 == 0) ? 1.0 : params.B / (a * double(d));
    c[d - n] = binomial(d, n) * sign * a_pow * factor;
    a_pow *= a;
  }
  return c;
}

VectorXd f_roots(double a, int d, double gamma, double pole_tolerance) {
  check_common(a, d);
  VectorXd roots(d);
  for (int k = 0; k < d; ++k) {
    // offset from the pole, exact when 2k = d
    const double phi = gamma + double(2 * k - d) * std::numbers::pi / (2.0 * d);
    if (std::abs(phi) <= pole_tolerance || phi == 0.0)
      throw DomainError("tangent pole at lattice index k = " + std::to_string(k));
    if (std::abs(phi) < std::numbers::pi / 4)
      roots[k] = -a / std::tan(phi);
    else
      roots[k] = a * std::tan(gamma + double(k) * std::numbers::pi / double(d));
  }
  std::sort(roots.data(), roots.data() + d);
  return roots;
}

VectorXd f_roots_from_p(double a, int d, double p) {
  check_common(a, d);
  if (!(p > 0.0 && p <= 1.0))
    throw DomainError("p must lie in (0, 1]");
  const bool odd = d % 2 == 1;
  const double s = (odd ? -std::asin(p) : std::asin(p)) / double(d);
  const double unit = std::numbers::pi / (2.0 * d);
  VectorXd roots(d);
  for (int k = 0; k < d; ++k) {
    const int j = 2 * k + (odd ? 1 : 0);
    const double phi = double(j - d) * unit + s;
    if (phi == 0.0)
      throw DomainError("tangent pole at lattice index k = " + std::to_string(k));
    if (std::abs(phi) < std::numbers::pi / 4)
      roots[k] = -a / std::tan(phi);
    else
      roots[k] = a * std::tan(double(j <= d ? j : j - 2 * d) * unit + s);
  }
  std::sort(roots.data(), roots.data() + d);
  return roots;
}

RealRootedPoly<double> build_f_poly(const FFamilyParams &params) {
  return RealRootedPoly<double>(f_roots(params.a, params.d, params.gamma));
}

double log_min_abs_lower_bound(double a, int d, double log_D) {
  check_common(a, d);
  const double dd = d;
  return 0.5 * dd * std::log(2.0 * a) - dd / (2.0 * dd - 2.0) * std::log(dd) +
         log_D / (2.0 * dd - 2.0);
}

double min_abs_lower_bound(double a, int d, double D) {
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  return std::exp(log_min_abs_lower_bound(a, d, std::log(D)));
}

double log_small_a_threshold(int d, double log_D) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  const double dd = d;
  return (-1.0 + 2.0 / dd) * std::numbers::ln2 - std::log(dd) / (dd - 1.0) +
         log_D / (dd * (dd - 1.0));
}

double small_a_threshold(int d, double D) {
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  return std::exp(log_small_a_threshold(d, std::log(D)));
}

bool small_a_condition_log(double a, int d, double log_D) {
  return std::log(a) <= log_small_a_threshold(d, log_D) + regime_slack;
}

bool small_a_condition(double a, int d, double D) {
  return a <= small_a_threshold(d, D) * (1.0 + regime_slack);
}

} // namespace extremal
