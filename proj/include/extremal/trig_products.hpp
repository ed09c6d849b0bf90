#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/types.hpp"

namespace extremal {

namespace detail {
inline void require_degree(int d) {
  if (d < 2)
    throw DomainError("trig product identities need d >= 2");
}
} // namespace detail

/// prod_{k=0}^{d-1} cos^2(x + pi k / d), evaluated factor by factor.
template <typename Scalar>
Scalar cos_sq_product(Scalar x, int d) {
  using std::cos;
  detail::require_degree(d);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar acc(1);
  for (int k = 0; k < d; ++k) {
    const Scalar c = cos(x + pi * Scalar(k) / Scalar(d));
    acc *= c * c;
  }
  return acc;
}

/// Closed form of cos_sq_product: 2^{2-2d} cos^2(dx) for odd d, 2^{2-2d} sin^2(dx) for even d.
template <typename Scalar>
Scalar cos_sq_product_closed(Scalar x, int d) {
  using std::cos;
  using std::ldexp;
  using std::sin;
  detail::require_degree(d);
  const Scalar t = (d % 2 == 1) ? cos(Scalar(d) * x) : sin(Scalar(d) * x);
  return ldexp(t * t, 2 - 2 * d);
}

/// sin(dx) - 2^{d-1} prod_{k=0}^{d-1} sin(x + pi k / d).
template <typename Scalar>
Scalar sine_product_identity_residual(Scalar x, int d) {
  using std::ldexp;
  using std::sin;
  detail::require_degree(d);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar acc(1);
  for (int k = 0; k < d; ++k)
    acc *= sin(x + pi * Scalar(k) / Scalar(d));
  return sin(Scalar(d) * x) - ldexp(acc, d - 1);
}

/// Angles shifted by their minimum, reduced into [0, pi) and sorted ascending.
template <typename Scalar>
std::vector<Scalar> normalize_angles(const Vector<Scalar> &ys) {
  using std::floor;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<Scalar> out(ys.data(), ys.data() + ys.size());
  if (out.empty())
    return out;
  const Scalar lo = *std::min_element(out.begin(), out.end());
  for (Scalar &y : out) {
    y -= lo;
    y -= pi * floor(y / pi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// log prod_{j<k} sin^2(y_j - y_k); -inf when two angles agree mod pi.
template <typename Scalar>
Scalar log_pairwise_sin_sq_product(const Vector<Scalar> &ys) {
  using std::abs;
  using std::log;
  using std::sin;
  const std::vector<Scalar> y = normalize_angles(ys);
  Scalar acc(0);
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t k = j + 1; k < y.size(); ++k)
      acc += Scalar(2) * log(abs(sin(y[k] - y[j])));
  return acc;
}

template <typename Scalar>
Scalar pairwise_sin_sq_product(const Vector<Scalar> &ys) {
  using std::exp;
  return exp(log_pairwise_sin_sq_product(ys));
}

/// log of 2^{-d(d-1)} d^d, the maximum of the pairwise sine-square product.
template <typename Scalar = double>
Scalar log_hadamard_bound(int d) {
  using std::log;
  detail::require_degree(d);
  return -Scalar(d) * Scalar(d - 1) * std::numbers::ln2_v<Scalar> + Scalar(d) * log(Scalar(d));
}

template <typename Scalar = double>
Scalar hadamard_bound(int d) {
  using std::exp;
  return exp(log_hadamard_bound<Scalar>(d));
}

/// Maximal deviation of sorted, normalized angles from an arithmetic progression with step pi/d.
template <typename Scalar>
Scalar progression_defect(const Vector<Scalar> &ys) {
  using std::abs;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const std::vector<Scalar> y = normalize_angles(ys);
  const Scalar step = pi / Scalar(y.size());
  Scalar worst(0);
  for (std::size_t k = 0; k < y.size(); ++k)
    worst = std::max(worst, abs(y[k] - Scalar(k) * step));
  return worst;
}

} // namespace extremal
