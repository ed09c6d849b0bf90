#include "extremal/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace extremal {

ChargeConfig config_from_points(const VectorXd &points, double a) {
  const RealRootedPoly<double> p(points);
  const int d = p.degree();
  ChargeConfig c;
  c.points = p.roots();
  c.a = a;
  c.potential_v = -log_modulus_at_ai(p, a) / double(d);
  c.log_disc = log_disc_from_roots(p);
  c.energy_I = c.log_disc.is_zero() ? std::numeric_limits<double>::infinity()
                                    : -c.log_disc.log_abs / (double(d) * double(d - 1));
  return c;
}

double energy_lower_bound(double a, int d, double v) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(a > 0))
    throw DomainError("evaluation height a must be positive");
  if (!(v < -std::log(a)))
    throw DomainError("potential v must be below -log a");
  return 2.0 * v + std::log(2.0 * a) - std::log(double(d)) / double(d - 1);
}

double equilibrium_threshold(double a, int d) {
  return (1.0 / double(d) - 1.0) * std::numbers::ln2 - std::log(a);
}

ChargeConfig solve_equilibrium(double a, int d, double v) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(a > 0))
    throw DomainError("evaluation height a must be positive");
  if (!(v < -std::log(a)))
    throw DomainError("potential v must be below -log a");
  const ExtremalSolution s = solve_max_disc_log(a, d, -v * double(d));
  return config_from_points(s.polys.front().roots(), a);
}

Regime equilibrium_regime(double a, int d, double v) {
  return solve_max_disc_log(a, d, -v * double(d)).regime;
}

std::vector<CdfRow> cdf_table(const ChargeConfig &config) {
  std::vector<double> x(config.points.data(), config.points.data() + config.points.size());
  std::sort(x.begin(), x.end());
  const double d = double(x.size());
  std::vector<CdfRow> rows;
  rows.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    rows.push_back({x[k], double(k + 1) / d, 0.5 + std::atan(x[k] / config.a) / std::numbers::pi});
  return rows;
}

double arctan_cdf_distance(const ChargeConfig &config) {
  const double step = 1.0 / double(config.points.size());
  double worst = 0.0;
  for (const CdfRow &row : cdf_table(config)) {
    // the empirical CDF jumps from empirical - 1/d to empirical at row.x
    worst = std::max({worst, std::abs(row.empirical - row.arctan),
                      std::abs(row.empirical - step - row.arctan)});
  }
  return worst;
}

} // namespace extremal
