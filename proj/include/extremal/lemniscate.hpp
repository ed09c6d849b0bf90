#pragma once

#include <optional>

#include "extremal/poly_core.hpp"

namespace extremal {

/// Largest disk centered on the real line inside E(f) = {z : |f(z)| <= 1}.
struct DiskResult {
  double center_x = 0.0;
  double radius = 0.0;
  /// center_x + i radius, where |f| = 1.
  ComplexValue boundary_point{0.0, 0.0};
  /// Set when every sampled halfwidth was zero.
  bool empty_interior = false;
};

/// The y >= 0 with |f(x + iy)| = 1 when |f(x)| <= 1, else 0.
double vertical_halfwidth(const RealRootedPoly<double> &p, double x);

DiskResult largest_disk(const RealRootedPoly<double> &p);

/// d^{1/(d-1)} / (2 D^{1/(d(d-1))}).
double radius_upper_bound(int d, double D);
double log_radius_upper_bound(int d, double log_D);

/// 2^{-1+2/d} d^{-1/(d-1)} when 1 <= D <= 2^{1-d} d^d, otherwise empty.
std::optional<double> radius_lower_bound_regime(int d, double D);

struct CorollaryPoly {
  RealRootedPoly<double> p;
  double a0;
  /// |p(a0 i)| evaluated from the roots.
  double value;
  /// 2 d^{-d/(d-1)} D^{1/(d-1)}.
  double expected_value;
};

/// ((x + a0 i)^d + (x - a0 i)^d) / 2 with a0 = 2^{-1+2/d} d^{-1/(d-1)} D^{1/(d(d-1))}.
CorollaryPoly corollary_poly(int d, double D);

} // namespace extremal
