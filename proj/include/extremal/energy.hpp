#pragma once

#include <vector>

#include "extremal/solvers.hpp"

namespace extremal {

/// d unit charges on the real line, with their potential at ai and discrete energy.
struct ChargeConfig {
  VectorXd points;
  double a = 1.0;
  /// U(ai) = -(1/d) log |f(ai)|.
  double potential_v = 0.0;
  /// -(1/(d(d-1))) log Delta; +inf when two points coincide.
  double energy_I = 0.0;
  LogDiscriminant log_disc;

  bool finite_energy() const { return !log_disc.is_zero(); }
};

ChargeConfig config_from_points(const VectorXd &points, double a);

/// 2v + log(2a) - log(d)/(d-1), valid for v < -log a.
double energy_lower_bound(double a, int d, double v);

/// (1/d - 1) log 2 - log a: at or below it the tangent lattice is the equilibrium.
double equilibrium_threshold(double a, int d);

/// Minimum-energy configuration with potential v at ai, through the dual
/// discriminant problem with log m = -v d.
ChargeConfig solve_equilibrium(double a, int d, double v);

/// Regime the equilibrium at (a, d, v) falls into.
Regime equilibrium_regime(double a, int d, double v);

/// Kolmogorov distance between the empirical CDF of the points and 1/2 + arctan(x/a)/pi.
double arctan_cdf_distance(const ChargeConfig &config);

struct CdfRow {
  double x;
  double empirical;
  double arctan;
};

/// Empirical CDF (right-continuous, k/d at the k-th point) next to the arctan law.
std::vector<CdfRow> cdf_table(const ChargeConfig &config);

} // namespace extremal
