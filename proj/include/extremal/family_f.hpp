#pragma once

#include "extremal/poly_core.hpp"

namespace extremal {

/// Parameters of the binomial family
///   F_{a,B}(x) = ((ad - Bi)(x + ai)^d + (ad + Bi)(x - ai)^d) / (2ad),
/// whose roots form the tangent lattice a tan(gamma + k pi / d).
struct FFamilyParams {
  double a = 1.0;
  int d = 2;
  double B = 0.0;
  double gamma = 0.0;
};

/// Scaled height p in (0, 1]; p == 1 exactly on the boundary of the small-a regime.
struct PValue {
  double p = 1.0;
};

PValue p_value(double a, int d, double D);
PValue p_value_log(double a, int d, double log_D);

/// gamma in [0, pi/(2d)]: arccos(p)/d for odd d, arcsin(p)/d for even d.
double gamma_from_p(int d, double p);
double gamma_value(double a, int d, double D);

/// B = (-1)^d a d sqrt(p^{-2} - 1), the x^{d-1} coefficient of the extremal F.
double b_from_p(double a, int d, double p);
double b_value(double a, int d, double D);

/// a d cot(d pi / 2 + d gamma).
double b_from_gamma(double a, int d, double gamma);

/// F-family parameters solving the minimum-modulus problem; requires the small-a condition.
FFamilyParams f_params(double a, int d, double D);
FFamilyParams f_params_log(double a, int d, double log_D);

/// Coefficient route: binomial expansion of F_{a,B}, ascending powers.
VectorXd f_coeffs(const FFamilyParams &params);

/// Root route: {a tan(gamma + k pi / d)}, ascending. Throws DomainError when an
/// angle lies within pole_tolerance of pi/2 mod pi.
VectorXd f_roots(double a, int d, double gamma, double pole_tolerance = 1e-12);

/// Same lattice written as j pi/(2d) +- asin(p)/d, so roots next to the tangent
/// pole keep full relative accuracy when p is tiny. 0 < p <= 1.
VectorXd f_roots_from_p(double a, int d, double p);

/// F_{a,B} built from its tangent-lattice roots.
RealRootedPoly<double> build_f_poly(const FFamilyParams &params);

/// (2a)^{d/2} d^{-d/(2d-2)} D^{1/(2d-2)}, the lower bound for |f(ai)| over K(d, D).
double min_abs_lower_bound(double a, int d, double D);
double log_min_abs_lower_bound(double a, int d, double log_D);

/// Largest a for which the binomial family is extremal.
double small_a_threshold(int d, double D);
double log_small_a_threshold(int d, double log_D);
bool small_a_condition(double a, int d, double D);
bool small_a_condition_log(double a, int d, double log_D);

} // namespace extremal
