#include "extremal/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace extremal {

namespace {

constexpr double boundary_tolerance = 1e-12;

void check_common(double a, int d) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(a > 0) || !std::isfinite(a))
    throw DomainError("evaluation height a must be positive and finite");
}

ExtremalSolution finish(ExtremalSolution s) {
  s.log_m = log_modulus_at_ai(s.polys.front(), s.a);
  s.achieved_m = std::exp(s.log_m);
  return s;
}

// F_{a,B} and its mirror for a given p in (0, 1]; a single polynomial when p == 1.
ExtremalSolution binomial_solution(Problem problem, double a, int d, double p) {
  ExtremalSolution s;
  s.problem = problem;
  s.a = a;
  s.d = d;
  if (p >= 1.0 - boundary_tolerance) {
    s.regime = Regime::Boundary;
    s.polys.emplace_back(f_roots_from_p(a, d, 1.0));
    s.lambda_or_B = 0.0;
  } else {
    s.regime = Regime::FFamily;
    const double B = b_from_p(a, d, p);
    RealRootedPoly<double> f(f_roots_from_p(a, d, p));
    RealRootedPoly<double> mirror = f.reflected();
    if (mirror.roots()[0] < f.roots()[0]) {
      s.polys = {mirror, f};
      s.lambda_or_B = -B;
    } else {
      s.polys = {f, mirror};
      s.lambda_or_B = B;
    }
  }
  s.achieved_disc = log_disc_from_roots(s.polys.front());
  return finish(std::move(s));
}

ExtremalSolution jacobi_solution(Problem problem, double a, int d, double lambda) {
  ExtremalSolution s;
  s.problem = problem;
  s.regime = Regime::GFamily;
  s.a = a;
  s.d = d;
  s.lambda_or_B = lambda;
  const GFamilyParams params{a, d, lambda};
  const auto roots = even_odd_structured_roots(g_coeffs(params));
  if (!roots)
    throw RegimeError("G_{a,lambda} is not real-rooted at lambda = " + std::to_string(lambda));
  s.polys.emplace_back(*roots);
  s.achieved_disc = g_disc_closed(params);
  return finish(std::move(s));
}

} // namespace

const char *to_string(Problem p) { return p == Problem::MinAbs ? "MinAbs" : "MaxDisc"; }

const char *to_string(Regime r) {
  switch (r) {
  case Regime::FFamily:
    return "FFamily";
  case Regime::GFamily:
    return "GFamily";
  case Regime::Boundary:
    return "Boundary";
  }
  return "?";
}

double log_disc_bound(double a, int d, double log_m) {
  const double dd = d;
  return (2.0 * dd - 2.0) * log_m + dd * std::log(dd) - dd * (dd - 1.0) * std::log(2.0 * a);
}

ExtremalSolution solve_max_disc_log(double a, int d, double log_m) {
  check_common(a, d);
  const double log_ratio = log_m - double(d) * std::log(a);
  if (!(log_ratio > 0))
    throw RegimeError("m must exceed a^d");
  const double excess = log_ratio - double(d - 1) * std::numbers::ln2;
  if (excess >= -boundary_tolerance) {
    // p = 2^{d-1} a^d / m
    return binomial_solution(Problem::MaxDisc, a, d, std::exp(-std::max(excess, 0.0)));
  }
  return jacobi_solution(Problem::MaxDisc, a, d, solve_lambda0_log(a, d, log_m));
}

ExtremalSolution solve_max_disc(double a, int d, double m) {
  if (!(m > 0) || !std::isfinite(m))
    throw RegimeError("m must be positive and finite");
  return solve_max_disc_log(a, d, std::log(m));
}

ExtremalSolution solve_min_abs_log(double a, int d, double log_D) {
  check_common(a, d);
  if (small_a_condition_log(a, d, log_D))
    return binomial_solution(Problem::MinAbs, a, d, p_value_log(a, d, log_D).p);

  // Large a: invert lambda -> log Delta_G(lambda) on [2d-2, inf), checking
  // the decrease at every evaluation instead of assuming it.
  auto excess = [&](double lambda) { return g_disc_closed({a, d, lambda}).log_abs - log_D; };
  double lo = 2.0 * d - 2.0;
  double f_lo = excess(lo);
  if (!(f_lo > 0))
    throw MonotonicityError("discriminant at lambda = 2d-2 does not exceed the target");
  double hi = 4.0 * d;
  double f_hi = excess(hi);
  while (f_hi >= 0) {
    if (f_hi > f_lo)
      throw MonotonicityError("discriminant of G increased along lambda");
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw MonotonicityError("failed to bracket lambda for the requested discriminant");
    f_hi = excess(hi);
  }
  for (int it = 0; it < 4000; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi)
      break;
    const double f_mid = excess(mid);
    // near the root neighbouring values differ by rounding only
    const double slack = 1e-12 * std::max(1.0, std::abs(log_D));
    if (f_mid > f_lo + slack || f_mid < f_hi - slack)
      throw MonotonicityError("discriminant of G is not monotone on the bracket");
    if (f_mid > 0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  const double lambda = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  return jacobi_solution(Problem::MinAbs, a, d, lambda);
}

ExtremalSolution solve_min_abs(double a, int d, double D) {
  if (!(D > 0) || !std::isfinite(D))
    throw DomainError("discriminant D must be positive and finite");
  return solve_min_abs_log(a, d, std::log(D));
}

RealRootedPoly<double> rescale_roots(const RealRootedPoly<double> &p, double factor) {
  return RealRootedPoly<double>(VectorXd(p.roots() * factor));
}

LagrangeResiduals lagrange_residuals(const RealRootedPoly<double> &p, double lambda) {
  const VectorXd &c = p.coeffs();
  const int d = p.degree();
  const VectorXd d1 = derivative(c);
  const VectorXd d2 = derivative(d1);
  const double shift = double(d) * (lambda - d + 1.0);

  LagrangeResiduals out;
  const double half_width = p.roots().cwiseAbs().maxCoeff() + 1.0;
  const int nodes = 4 * d;
  for (int j = 0; j < nodes; ++j) {
    const double x = half_width * std::cos(std::numbers::pi * (j + 0.5) / nodes);
    const double res = (x * x + 1.0) * horner(d2, x) - lambda * x * horner(d1, x) +
                       shift * horner(c, x);
    // magnitude of the individual terms, so the residual is scale-free
    double scale = 0.0, x_pow = 1.0;
    for (int k = 0; k <= d; ++k) {
      const double ak = std::abs(c[k]);
      double term = (std::abs(lambda) * k + std::abs(shift)) * x_pow;
      if (k >= 2)
        term += (x * x + 1.0) * double(k) * double(k - 1) * std::pow(std::abs(x), k - 2);
      scale += ak * term;
      x_pow *= std::abs(x);
    }
    out.ode = std::max(out.ode, std::abs(res) / scale);
  }

  double scale = 0.0;
  std::vector<double> diffs;
  for (int k = 0; k <= d - 2; ++k) {
    const double lhs = double(k + 1) * double(k + 2) * c[k + 2];
    const double rhs = double(d - k) * (d + k - 1.0 - lambda) * c[k];
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
    diffs.push_back(std::abs(lhs - rhs));
  }
  const double lead = std::abs((lambda - 2.0 * d + 2.0) * c[d - 1]);
  scale = std::max(scale, 1.0);
  out.recurrence = *std::max_element(diffs.begin(), diffs.end()) / scale + lead / scale;
  return out;
}

namespace {

// Unit-height (a = 1) problem: maximize sum log (u_j - u_k)^2 subject to
// sum log sqrt(1 + u_k^2) = target.
struct UnitAscent {
  int d;
  double target;
  int max_iters;

  double constraint(const VectorXd &u) const {
    double acc = 0.0;
    for (int k = 0; k < d; ++k)
      acc += 0.5 * std::log1p(u[k] * u[k]);
    return acc;
  }

  double objective(const VectorXd &u) const {
    double acc = 0.0;
    for (int j = 0; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        acc += 2.0 * std::log(std::abs(u[j] - u[k]));
    return acc;
  }

  static bool strictly_increasing(const VectorXd &u) {
    for (Eigen::Index k = 1; k < u.size(); ++k)
      if (!(u[k] > u[k - 1]))
        return false;
    return true;
  }

  // Rescales u by the unique t > 0 restoring the constraint; safeguarded Newton in log t.
  bool retract(VectorXd &u) const {
    auto phi = [&](double s) {
      const double t2 = std::exp(2.0 * s);
      double val = 0.0, slope = 0.0;
      for (int k = 0; k < d; ++k) {
        const double q = t2 * u[k] * u[k];
        val += 0.5 * std::log1p(q);
        slope += q / (1.0 + q);
      }
      return std::pair{val - target, slope};
    };
    double lo = -1.0, hi = 1.0;
    while (phi(lo).first > 0) {
      lo *= 2.0;
      if (lo < -700)
        return false;
    }
    while (phi(hi).first < 0) {
      hi *= 2.0;
      if (hi > 700)
        return false;
    }
    double s = 0.0;
    if (s <= lo || s >= hi)
      s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const auto [val, slope] = phi(s);
      if (val == 0.0)
        break;
      if (val < 0)
        lo = s;
      else
        hi = s;
      double next = slope > 0 ? s - val / slope : 0.5 * (lo + hi);
      if (!(next > lo && next < hi))
        next = 0.5 * (lo + hi);
      if (std::abs(next - s) <= 1e-16 * std::max(1.0, std::abs(s))) {
        s = next;
        break;
      }
      s = next;
    }
    u *= std::exp(s);
    return true;
  }

  struct Result {
    VectorXd u;
    double value;
    bool converged;
  };

  Result run(VectorXd u) const {
    if (!retract(u))
      return {u, -std::numeric_limits<double>::infinity(), false};
    double value = objective(u);
    double eta = 1e-2 / double(d * d);
    int quiet = 0;
    for (int it = 0; it < max_iters; ++it) {
      VectorXd grad = VectorXd::Zero(d);
      VectorXd normal(d);
      for (int k = 0; k < d; ++k) {
        for (int j = 0; j < d; ++j)
          if (j != k)
            grad[k] += 2.0 / (u[k] - u[j]);
        normal[k] = u[k] / (1.0 + u[k] * u[k]);
      }
      const VectorXd dir = grad - (grad.dot(normal) / normal.squaredNorm()) * normal;
      const double spread = u[d - 1] - u[0];
      if (dir.norm() * spread <= 1e-13 * double(d * d))
        return {u, value, true};

      VectorXd trial = u + eta * dir;
      bool accepted = false;
      if (strictly_increasing(trial) && retract(trial) && strictly_increasing(trial)) {
        const double trial_value = objective(trial);
        if (trial_value > value) {
          const double gain = trial_value - value;
          u = trial;
          value = trial_value;
          eta *= 1.5;
          accepted = true;
          quiet = gain <= 1e-15 * std::max(1.0, std::abs(value)) ? quiet + 1 : 0;
          if (quiet >= 25)
            return {u, value, true};
        }
      }
      if (!accepted) {
        eta *= 0.5;
        if (eta * dir.norm() <= 1e-17 * std::max(1.0, spread))
          return {u, value, true};
      }
    }
    return {u, value, false};
  }
};

double uniform01(std::mt19937_64 &rng) { return double(rng() >> 11) * 0x1.0p-53; }

} // namespace

OracleResult numeric_oracle_max_disc(double a, int d, double m, const OracleOptions &options) {
  check_common(a, d);
  if (d > 6)
    throw DomainError("numeric oracle is limited to d <= 6");
  if (!(m > std::pow(a, d)))
    throw RegimeError("m must exceed a^d");
  if (options.starts < 1)
    throw DomainError("numeric oracle needs at least one start");

  const UnitAscent ascent{d, std::log(m) - double(d) * std::log(a), options.max_iters};
  OracleResult out;
  double best = -std::numeric_limits<double>::infinity();
  for (int start = 0; start < options.starts; ++start) {
    std::mt19937_64 rng(options.seed + std::uint64_t(start));
    VectorXd u(d);
    for (int k = 0; k < d; ++k)
      u[k] = 2.0 * uniform01(rng) - 1.0;
    std::sort(u.data(), u.data() + d);
    if (!UnitAscent::strictly_increasing(u))
      continue;
    const auto result = ascent.run(u);
    out.converged = out.converged && result.converged;
    if (result.value > best) {
      best = result.value;
      out.best_start = start;
      out.best_roots = a * result.u;
    }
  }
  out.best_log_disc = LogDiscriminant{1, best + double(d) * double(d - 1) * std::log(a)};
  return out;
}

} // namespace extremal
