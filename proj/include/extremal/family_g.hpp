#pragma once

#include "extremal/poly_core.hpp"

namespace extremal {

/// Parameters of the even/odd family
///   G_{a,lambda}(x) = x^d + sum_k (-1)^k a^{2k} C(d,2k) (2k-1)!! / prod_{j<=k} (lambda - 2d + 2j + 1) x^{d-2k}.
/// lambda must avoid the pole set {2 ceil(d/2) - 1, ..., 2d - 3}.
struct GFamilyParams {
  double a = 1.0;
  int d = 2;
  double lambda = 2.0;
};

/// Jacobi polynomial P_d^{(alpha, beta)} for arbitrary real parameters.
struct JacobiParams {
  int d = 2;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Rising factorial (t)_n = t (t+1) ... (t+n-1).
double pochhammer(double t, int n);

/// Generalized binomial t (t-1) ... (t-n+1) / n!.
double generalized_binomial(double t, int n);

/// Ascending coefficients of G_{a,lambda}; odd-offset entries are exactly zero.
VectorXd g_coeffs(const GFamilyParams &params);

/// sum_{k>=1} C(d,2k) (2k-1)!! / prod_{j<=k} (lambda - 2d + 2j + 1), i.e. |G_{1,lambda}(i)| - 1.
double constraint_excess(int d, double lambda);

/// Unique lambda_0 >= 2d-2 with 1 + constraint_excess(d, lambda_0) = m / a^d,
/// for a^d < m <= 2^{d-1} a^d.
double solve_lambda0(double a, int d, double m);
double solve_lambda0_log(double a, int d, double log_m);

/// Closed-form discriminant of G_{a,lambda}.
LogDiscriminant g_disc_closed(const GFamilyParams &params);

VectorXd jacobi_coeffs(const JacobiParams &params);
VectorXd gegenbauer_coeffs(int d, double mu);

/// max_k |coefficient of P_d^{(mu-1/2, mu-1/2)} - (mu+1/2)_d/(2mu)_d C_d^mu|.
double jacobi_gegenbauer_residual(int d, double mu);

/// Relative coefficient residual of
///   G_{a,lambda}(x) = (2ai)^d d! / ((-1)^d (lambda-2d+2)_d) P_d^{(-lambda/2-1, -lambda/2-1)}(-ix/a).
double g_jacobi_identity_residual(const GFamilyParams &params);

/// Closed-form discriminant of P_d^{(alpha, beta)}, valid when alpha + beta != -d-k, k = 1..d.
LogDiscriminant jacobi_disc(const JacobiParams &params);

/// Coefficients of the degenerate multiplier family lambda = d + K - 1
/// (0 <= K <= d-3, d - K odd) with free coefficient c_K.
VectorXd degenerate_family_coeffs(int d, int K, double cK);

/// Descartes bound on the number of real roots: sign changes of f(x) and
/// f(-x) plus the multiplicity of the root at zero.
int descartes_real_root_bound(const VectorXd &coeffs);

} // namespace extremal
