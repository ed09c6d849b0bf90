#include "extremal/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "extremal/energy.hpp"
#include "extremal/lemniscate.hpp"
#include "extremal/solvers.hpp"
#include "extremal/trig_products.hpp"

namespace extremal {

namespace {

class Draws {
public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * double(rng_() >> 11) * 0x1.0p-53; }
  int integer(int lo, int hi) { return lo + int(rng_() % std::uint64_t(hi - lo + 1)); }

private:
  std::mt19937_64 rng_;
};

// Worst error over a batch of comparisons against one tolerance.
struct Worst {
  double tol;
  double value = 0.0;
  int cases = 0;
  int failures = 0;

  void add(double err) {
    ++cases;
    if (!(err <= tol))
      ++failures;
    if (!(err <= value))
      value = err;
  }
  void require(bool ok) {
    ++cases;
    if (!ok)
      ++failures;
  }
};

std::string describe(const Worst &w) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst %.3e, tol %.1e, %d cases, %d failed", w.value, w.tol,
                w.cases, w.failures);
  return buf;
}

CheckResult run_check(const std::string &name, double tol, const std::function<void(Worst &)> &body) {
  Worst w{tol};
  try {
    body(w);
  } catch (const std::exception &e) {
    return {name, false, std::string("error: ") + e.what()};
  }
  return {name, w.failures == 0 && w.cases > 0, describe(w)};
}

// a = 1 maximal discriminants for d = 2..5 in closed form.
double small_degree_disc(int d, double m) {
  switch (d) {
  case 2:
    return 4 * (m - 1);
  case 3:
    return 4 * std::pow(m - 1, 3);
  case 4: {
    const double s = m * m + 7 * m + 1;
    return 1024.0 / 3125.0 *
           (2 * std::pow(s, 1.5) * (m * m - 18 * m + 1) +
            (m + 1) * (2 * std::pow(m, 4) - 17 * std::pow(m, 3) + 462 * m * m - 17 * m + 2));
  }
  default: {
    const double s = m * m + 23 * m + 1;
    const double k = 55296.0 / 823543.0;
    const double tail = std::pow(m, 6) - 18.5 * std::pow(m, 5) + 56755.0 / 27 * std::pow(m, 4) +
                        287435.0 / 27 * std::pow(m, 3) + 56755.0 / 27 * m * m - 18.5 * m + 1;
    return k * std::pow(s, 1.5) * (m * m - 54 * m - 27) * (m * m + 2 * m - 1.0 / 27) +
           k * (m + 1) * tail;
  }
  }
}

double boundary_m(double a, int d) { return std::ldexp(std::pow(a, d), d - 1); }

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions &options) {
  const int max_d = options.deep ? 8 : 6;
  const double tol = options.tol_oracle;
  std::vector<CheckResult> out;

  out.push_back(run_check("small-degree maximal discriminants", 1e-9, [&](Worst &w) {
    for (int d = 2; d <= 5; ++d)
      for (int i = 1; i <= 10; ++i) {
        const double m = 1.0 + (std::ldexp(1.0, d - 1) - 1.0) * i / 10.0;
        w.add(log_rel_diff(solve_max_disc(1.0, d, m).achieved_disc.log_abs,
                           std::log(small_degree_disc(d, m))));
      }
    w.add(std::abs(solve_max_disc(1.0, 4, 8.0).achieved_disc.value() - 16384.0) / 16384.0);
    w.add(std::abs(solve_max_disc(1.0, 5, 16.0).achieved_disc.value() - 12800000.0) / 12800000.0);
  }));

  out.push_back(run_check("G discriminant closed form vs resultant", tol, [&](Worst &w) {
    Draws rng(101);
    for (int d = 2; d <= max_d; ++d)
      for (double a : {0.5, 1.0, 2.0})
        for (int t = 0; t < 20; ++t) {
          const GFamilyParams params{a, d, rng.uniform(2.0 * d - 2, 6.0 * d)};
          const auto closed = g_disc_closed(params);
          const auto oracle = disc_resultant_oracle(g_coeffs(params));
          w.require(closed.sign == oracle.sign);
          w.add(log_rel_diff(closed.log_abs, oracle.log_abs));
        }
  }));

  out.push_back(run_check("Jacobi discriminant vs resultant", tol, [&](Worst &w) {
    Draws rng(202);
    int drawn = 0;
    while (drawn < 50) {
      const int d = rng.integer(2, 7);
      double alpha, beta;
      if (drawn % 2 == 0) {
        alpha = beta = rng.uniform(-3.0 * d, -double(d));
      } else {
        alpha = rng.uniform(-6, 6);
        beta = rng.uniform(-6, 6);
      }
      bool excluded = false;
      for (int k = 1; k <= d; ++k)
        excluded = excluded || std::abs(alpha + beta + d + k) < 1e-2 ||
                   std::abs(k + alpha) < 1e-2 || std::abs(k + beta) < 1e-2;
      if (excluded)
        continue;
      ++drawn;
      const auto closed = jacobi_disc({d, alpha, beta});
      const auto oracle = disc_resultant_oracle(jacobi_coeffs({d, alpha, beta}));
      w.require(closed.sign == oracle.sign);
      w.add(log_rel_diff(closed.log_abs, oracle.log_abs));
    }
  }));

  out.push_back(run_check("Jacobi and Gegenbauer identities", 1e-9, [&](Worst &w) {
    Draws rng(303);
    for (int t = 0; t < 40; ++t) {
      const int d = rng.integer(2, max_d);
      const double lambda = rng.uniform(2.0 * d - 1.9, 6.0 * d);
      w.add(g_jacobi_identity_residual({rng.uniform(0.3, 3.0), d, lambda}));
    }
    w.add(jacobi_gegenbauer_residual(2, 0.5));
    w.add(jacobi_gegenbauer_residual(4, 2.0));
    w.add(jacobi_gegenbauer_residual(5, -3.2));
  }));

  // (a, d, log D) in the binomial regime
  auto small_a_cases = [&](const std::function<void(double, int, double)> &visit) {
    Draws rng(404);
    for (int t = 0; t < 100; ++t) {
      const int d = rng.integer(2, max_d);
      const double log_D = rng.uniform(-3.0, 12.0);
      visit(std::exp(log_small_a_threshold(d, log_D)) * rng.uniform(0.05, 1.0), d, log_D);
    }
  };
  out.push_back(run_check("binomial family attains the |f(ai)| bound", 1e-9, [&](Worst &w) {
    small_a_cases([&](double a, int d, double log_D) {
      const auto s = solve_min_abs_log(a, d, log_D);
      w.require(s.regime != Regime::GFamily);
      w.add(std::abs(std::expm1(s.log_m - log_min_abs_lower_bound(a, d, log_D))));
    });
  }));
  out.push_back(run_check("binomial family has the prescribed discriminant", tol, [&](Worst &w) {
    small_a_cases([&](double a, int d, double log_D) {
      const auto s = solve_min_abs_log(a, d, log_D);
      w.add(std::abs(log_disc_from_roots(s.polys.front()).log_abs - log_D));
    });
  }));

  out.push_back(run_check("duality of the two problems", tol, [&](Worst &w) {
    Draws rng(505);
    for (int t = 0; t < 40; ++t) {
      const int d = rng.integer(2, max_d);
      const double a = rng.uniform(0.3, 2.5);
      const double log_D = rng.uniform(-5.0, 25.0);
      const auto primal = solve_min_abs_log(a, d, log_D);
      w.add(log_rel_diff(solve_max_disc_log(a, d, primal.log_m).achieved_disc.log_abs, log_D));
    }
  }));

  out.push_back(run_check("trigonometric product identities", 1e-12, [&](Worst &w) {
    Draws rng(606);
    for (int d = 2; d <= 10; ++d)
      for (int t = 0; t < 200; ++t) {
        const double x = rng.uniform(-std::numbers::pi, std::numbers::pi);
        w.add(std::abs(sine_product_identity_residual(x, d)));
        w.add(std::abs(cos_sq_product(x, d) - cos_sq_product_closed(x, d)));
      }
  }));

  out.push_back(run_check("pairwise sine product bound", 1e-9, [&](Worst &w) {
    Draws rng(707);
    for (int d = 2; d <= 7; ++d) {
      const double bound = log_hadamard_bound(d);
      for (int t = 0; t < 1000; ++t) {
        VectorXd ys(d);
        for (int k = 0; k < d; ++k)
          ys[k] = rng.uniform(0.0, std::numbers::pi);
        w.require(log_pairwise_sin_sq_product(ys) < bound);
      }
      VectorXd ap(d);
      const double phase = rng.uniform(0.0, std::numbers::pi);
      for (int k = 0; k < d; ++k)
        ap[k] = phase + k * std::numbers::pi / d;
      w.add(std::abs(log_pairwise_sin_sq_product(ap) - bound));
    }
  }));

  out.push_back(run_check("Lagrange equations at the extremals", 1e-9, [&](Worst &w) {
    for (int d = 2; d <= max_d; ++d)
      for (double a : {0.5, 1.0, 2.0})
        for (double f : {0.2, 0.6, 1.0, 1.5, 8.0}) {
          const double lo = std::pow(a, d);
          const double m = f <= 1.0 ? lo + (boundary_m(a, d) - lo) * f : boundary_m(a, d) * f;
          const auto s = solve_max_disc(a, d, m);
          const double lambda = s.regime == Regime::GFamily ? s.lambda_or_B : 2.0 * d - 2.0;
          for (const auto &p : s.polys) {
            const auto r = lagrange_residuals(rescale_roots(p, 1.0 / a), lambda);
            w.add(r.ode);
            w.add(r.recurrence);
          }
        }
  }));

  out.push_back(run_check("degenerate multiplier family is not real-rooted", 0.0, [&](Worst &w) {
    for (int d = 3; d <= 9; ++d)
      for (int K = 0; K <= d - 3; ++K) {
        if ((d - K) % 2 == 0)
          continue;
        for (double cK : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
          const VectorXd c = degenerate_family_coeffs(d, K, cK);
          w.require(descartes_real_root_bound(c) < d || int(real_roots(c).size()) < d);
        }
      }
  }));

  out.push_back(run_check("lemniscate disk at the critical discriminant", 1e-8, [&](Worst &w) {
    for (int d = 2; d <= max_d; ++d) {
      const double D = std::exp((1.0 - d) * std::log(2.0) + d * std::log(double(d)));
      const auto c = corollary_poly(d, D);
      const double target = std::pow(2.0, -1.0 + 1.0 / d);
      const auto disk = largest_disk(c.p);
      w.add(std::max(0.0, target - disk.radius));
      w.add(std::max(0.0, disk.radius - radius_upper_bound(d, D)));
    }
  }));

  out.push_back(run_check("energy bound equality", 1e-9, [&](Worst &w) {
    Draws rng(808);
    for (int t = 0; t < 20; ++t) {
      const int d = rng.integer(2, max_d);
      const double a = rng.uniform(0.3, 2.0);
      const double v = equilibrium_threshold(a, d) - rng.uniform(0.0, 2.0);
      const auto e = solve_equilibrium(a, d, v);
      w.add(std::abs(e.energy_I - energy_lower_bound(a, d, v)));
    }
  }));

  out.push_back(run_check("arctan law of the lattice equilibria", 0.0, [&](Worst &w) {
    double previous = 1.0;
    for (int d : options.deep ? std::vector<int>{10, 100, 1000} : std::vector<int>{10, 100}) {
      const double dist = arctan_cdf_distance(solve_equilibrium(1.0, d, equilibrium_threshold(1.0, d)));
      w.require(dist < previous && dist <= 3.0 / d);
      previous = dist;
    }
  }));

  if (options.deep) {
    out.push_back(run_check("numeric ascent oracle", 1e-5, [&](Worst &w) {
      OracleOptions opts;
      opts.starts = 16;
      opts.seed = 1;
      for (int d = 2; d <= 5; ++d)
        for (double f : {0.25, 0.75, 1.0, 3.0}) {
          const double m = 1.0 + (boundary_m(1.0, d) - 1.0) * std::min(f, 1.0) +
                           boundary_m(1.0, d) * std::max(f - 1.0, 0.0);
          const auto closed = solve_max_disc(1.0, d, m);
          const auto oracle = numeric_oracle_max_disc(1.0, d, m, opts);
          w.add(log_rel_diff(oracle.best_log_disc.log_abs, closed.achieved_disc.log_abs));
        }
    }));
  }
  return out;
}

std::string render_report(const std::vector<CheckResult> &checks) {
  std::string out;
  int passed = 0;
  for (const auto &c : checks) {
    out += (c.pass ? "PASS  " : "FAIL  ") + c.name + "  (" + c.detail + ")\n";
    passed += c.pass;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d/%zu checks passed\n", passed, checks.size());
  return out + buf;
}

bool all_passed(const std::vector<CheckResult> &checks) {
  for (const auto &c : checks)
    if (!c.pass)
      return false;
  return true;
}

} // namespace extremal
