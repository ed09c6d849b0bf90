#pragma once

#include <cstdint>
#include <vector>

#include "extremal/family_f.hpp"
#include "extremal/family_g.hpp"

namespace extremal {

enum class Problem { MinAbs, MaxDisc };

/// FFamily: tangent-lattice binomial family with B != 0 (two mirror solutions).
/// GFamily: generalized-Jacobi family G_{a,lambda_0}.
/// Boundary: m = 2^{d-1} a^d, where both families meet in F_{a,0} = G_{a,2d-2}.
enum class Regime { FFamily, GFamily, Boundary };

const char *to_string(Problem p);
const char *to_string(Regime r);

struct ExtremalSolution {
  Problem problem = Problem::MaxDisc;
  Regime regime = Regime::FFamily;
  double a = 1.0;
  int d = 2;
  /// One polynomial, or the mirror pair F and (-1)^d F(-x) sorted by smallest root.
  std::vector<RealRootedPoly<double>> polys;
  double log_m = 0.0;
  /// exp(log_m); +inf when it overflows.
  double achieved_m = 1.0;
  LogDiscriminant achieved_disc;
  /// lambda_0 in the G regime, B (of the first polynomial) otherwise.
  double lambda_or_B = 0.0;
};

/// log of m^{2d-2} d^d / (2a)^{d(d-1)}, the discriminant bound at fixed |f(ai)| = m.
double log_disc_bound(double a, int d, double log_m);

/// Problem 2: maximize the discriminant among real-rooted monic f with |f(ai)| = m > a^d.
ExtremalSolution solve_max_disc(double a, int d, double m);
ExtremalSolution solve_max_disc_log(double a, int d, double log_m);

/// Problem 1: minimize |f(ai)| among real-rooted monic f with discriminant D.
ExtremalSolution solve_min_abs(double a, int d, double D);
ExtremalSolution solve_min_abs_log(double a, int d, double log_D);

struct LagrangeResiduals {
  double ode = 0.0;
  double recurrence = 0.0;
};

/// Residuals of (x^2+1) f'' - lambda x f' + d(lambda - d + 1) f = 0 on a
/// Chebyshev grid and of the induced coefficient recurrences; expects a = 1
/// normalization (see rescale_roots).
LagrangeResiduals lagrange_residuals(const RealRootedPoly<double> &p, double lambda);

/// Polynomial with every root multiplied by factor.
RealRootedPoly<double> rescale_roots(const RealRootedPoly<double> &p, double factor);

struct OracleResult {
  LogDiscriminant best_log_disc;
  VectorXd best_roots;
  int best_start = -1;
  /// False when any start hit max_iters before its stopping test.
  bool converged = true;
};

struct OracleOptions {
  int starts = 32;
  std::uint64_t seed = 1;
  int max_iters = 100000;
};

/// Multi-start projected gradient ascent on sum log (x_j - x_k)^2 subject to
/// sum log sqrt(a^2 + x_k^2) = log m. Deterministic for a fixed seed.
OracleResult numeric_oracle_max_disc(double a, int d, double m, const OracleOptions &options = {});

} // namespace extremal
