#include "extremal/lemniscate.hpp"

#include <cmath>
#include <numbers>

#include "extremal/family_f.hpp"

namespace extremal {

namespace {

double log_abs_at(const RealRootedPoly<double> &p, double x, double y) {
  double acc = 0.0;
  const VectorXd &r = p.roots();
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    const double dx = x - r[k];
    const double q = dx * dx + y * y;
    // factors near 1 decide the sign of the sum, keep their low bits
    acc += (q > 0.5 && q < 2.0) ? std::log1p((dx - 1.0) * (dx + 1.0) + y * y) : std::log(q);
  }
  return 0.5 * acc;
}

} // namespace

double vertical_halfwidth(const RealRootedPoly<double> &p, double x) {
  if (log_abs_at(p, x, 0.0) > 0.0)
    return 0.0;
  // every factor (x - x_k)^2 + y^2 is >= 1 at y = 1, so the crossing lies in [0, 1]
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (log_abs_at(p, x, mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

DiskResult largest_disk(const RealRootedPoly<double> &p) {
  const int d = p.degree();
  const double left = p.roots()[0] - 1.0;
  const double right = p.roots()[d - 1] + 1.0;
  const int samples = 64 * d;
  const double step = (right - left) / double(samples - 1);

  int best = 0;
  double best_width = -1.0;
  for (int i = 0; i < samples; ++i) {
    const double w = vertical_halfwidth(p, left + step * i);
    if (w > best_width) {
      best_width = w;
      best = i;
    }
  }

  DiskResult out;
  if (best_width <= 0.0) {
    out.empty_interior = true;
    out.center_x = left + step * best;
    out.boundary_point = {out.center_x, 0.0};
    return out;
  }

  // golden-section search for the maximum of the halfwidth around the best cell
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = left + step * std::max(best - 1, 0);
  double hi = left + step * std::min(best + 1, samples - 1);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double w1 = vertical_halfwidth(p, x1), w2 = vertical_halfwidth(p, x2);
  while (hi - lo > 1e-10) {
    if (w1 < w2) {
      lo = x1;
      x1 = x2;
      w1 = w2;
      x2 = lo + inv_phi * (hi - lo);
      w2 = vertical_halfwidth(p, x2);
    } else {
      hi = x2;
      x2 = x1;
      w2 = w1;
      x1 = hi - inv_phi * (hi - lo);
      w1 = vertical_halfwidth(p, x1);
    }
  }
  double center = 0.5 * (lo + hi);
  double radius = vertical_halfwidth(p, center);
  const double grid_x = left + step * best;
  if (best_width > radius) {
    center = grid_x;
    radius = best_width;
  }
  out.center_x = center;
  out.radius = radius;
  out.boundary_point = {center, radius};
  return out;
}

double log_radius_upper_bound(int d, double log_D) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  const double dd = d;
  return std::log(dd) / (dd - 1.0) - std::numbers::ln2 - log_D / (dd * (dd - 1.0));
}

double radius_upper_bound(int d, double D) {
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  return std::exp(log_radius_upper_bound(d, std::log(D)));
}

std::optional<double> radius_lower_bound_regime(int d, double D) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  const double dd = d;
  const double log_top = (1.0 - dd) * std::numbers::ln2 + dd * std::log(dd);
  if (D < 1.0 || std::log(D) > log_top + 1e-12)
    return std::nullopt;
  return std::exp((-1.0 + 2.0 / dd) * std::numbers::ln2 - std::log(dd) / (dd - 1.0));
}

CorollaryPoly corollary_poly(int d, double D) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  if (!(D > 0))
    throw DomainError("discriminant D must be positive");
  const double dd = d;
  const double a0 = std::exp(log_small_a_threshold(d, std::log(D)));
  RealRootedPoly<double> p(f_roots_from_p(a0, d, 1.0));
  const double value = modulus_at_ai(p, a0);
  const double expected =
      2.0 * std::exp(-dd / (dd - 1.0) * std::log(dd) + std::log(D) / (dd - 1.0));
  return {std::move(p), a0, value, expected};
}

} // namespace extremal
