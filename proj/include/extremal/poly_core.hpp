#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "extremal/errors.hpp"
#include "extremal/log_disc.hpp"
#include "extremal/types.hpp"

namespace extremal {

/// Monic polynomial of degree d >= 2 with d real roots.
///
/// Roots are kept in ascending order (stable with respect to the input order
/// for ties); the coefficient vector c_0..c_d (ascending powers, c_d = 1) is
/// expanded from the roots once, at construction.
template <typename Scalar = double>
class RealRootedPoly {
public:
  explicit RealRootedPoly(const Vector<Scalar> &roots) {
    using std::isfinite;
    if (roots.size() < 2)
      throw DomainError("polynomial degree must be at least 2, got " +
                        std::to_string(roots.size()));
    for (Eigen::Index k = 0; k < roots.size(); ++k)
      if (!isfinite(roots[k]))
        throw InputError("root " + std::to_string(k) + " is not finite");

    std::vector<Scalar> sorted(roots.data(), roots.data() + roots.size());
    std::stable_sort(sorted.begin(), sorted.end());
    roots_ = Eigen::Map<const Vector<Scalar>>(sorted.data(), Eigen::Index(sorted.size()));

    const Eigen::Index d = roots_.size();
    coeffs_ = Vector<Scalar>::Zero(d + 1);
    coeffs_[0] = Scalar(1);
    // multiply by (x - r) one factor at a time
    for (Eigen::Index n = 0; n < d; ++n) {
      const Scalar r = roots_[n];
      for (Eigen::Index k = n + 1; k > 0; --k)
        coeffs_[k] = coeffs_[k - 1] - r * coeffs_[k];
      coeffs_[0] = -r * coeffs_[0];
    }
  }

  int degree() const { return int(roots_.size()); }
  const Vector<Scalar> &roots() const { return roots_; }
  const Vector<Scalar> &coeffs() const { return coeffs_; }

  /// The polynomial (-1)^d f(-x), whose roots are the negated roots of f.
  RealRootedPoly reflected() const { return RealRootedPoly(Vector<Scalar>(-roots_)); }

private:
  Vector<Scalar> roots_;
  Vector<Scalar> coeffs_;
};

template <typename Scalar>
RealRootedPoly<Scalar> poly_from_roots(const Vector<Scalar> &roots) {
  return RealRootedPoly<Scalar>(roots);
}

inline RealRootedPoly<double> poly_from_roots(std::initializer_list<double> roots) {
  VectorXd v(Eigen::Index(roots.size()));
  std::copy(roots.begin(), roots.end(), v.data());
  return RealRootedPoly<double>(v);
}

/// Product form prod (z - x_k); accurate close to the roots.
template <typename Scalar>
Complex<Scalar> eval_at(const RealRootedPoly<Scalar> &p, const Complex<Scalar> &z) {
  Complex<Scalar> acc(1);
  for (Eigen::Index k = 0; k < p.roots().size(); ++k)
    acc *= z - p.roots()[k];
  return acc;
}

/// log |f(ai)| = sum log sqrt(a^2 + x_k^2).
template <typename Scalar>
Scalar log_modulus_at_ai(const RealRootedPoly<Scalar> &p, Scalar a) {
  using std::hypot;
  using std::log;
  if (!(a > Scalar(0)))
    throw DomainError("evaluation height a must be positive");
  Scalar acc(0);
  for (Eigen::Index k = 0; k < p.roots().size(); ++k)
    acc += log(hypot(a, p.roots()[k]));
  return acc;
}

template <typename Scalar>
Scalar modulus_at_ai(const RealRootedPoly<Scalar> &p, Scalar a) {
  using std::exp;
  return exp(log_modulus_at_ai(p, a));
}

/// Discriminant from pairwise root differences, sum of 2 log|x_j - x_k|.
template <typename Scalar>
LogValue<Scalar> log_disc_from_roots(const Vector<Scalar> &roots) {
  using std::abs;
  using std::log;
  LogValue<Scalar> out = LogValue<Scalar>::one();
  out.log_abs = Scalar(0);
  const Eigen::Index d = roots.size();
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      const Scalar diff = roots[j] - roots[k];
      if (diff == Scalar(0))
        return LogValue<Scalar>::zero();
      out.log_abs += Scalar(2) * log(abs(diff));
    }
  }
  return out;
}

template <typename Scalar>
LogValue<Scalar> log_disc_from_roots(const RealRootedPoly<Scalar> &p) {
  return log_disc_from_roots(p.roots());
}

/// Horner evaluation of an ascending coefficient vector.
template <typename Scalar, typename X>
X horner(const Vector<Scalar> &coeffs, const X &x) {
  X acc(0);
  for (Eigen::Index k = coeffs.size(); k-- > 0;)
    acc = acc * x + X(coeffs[k]);
  return acc;
}

template <typename Scalar>
Vector<Scalar> derivative(const Vector<Scalar> &coeffs) {
  const Eigen::Index n = coeffs.size();
  if (n <= 1)
    return Vector<Scalar>::Zero(1);
  Vector<Scalar> out(n - 1);
  for (Eigen::Index k = 1; k < n; ++k)
    out[k - 1] = Scalar(k) * coeffs[k];
  return out;
}

/// Discriminant from the coefficients alone, via the Sylvester resultant of f and f'.
///
/// Independent of any root computation: the polynomial is made monic and
/// rescaled by a power of two (x -> s x) to balance its coefficients, then the
/// (2d-1)x(2d-1) Sylvester determinant is factored with partial pivoting in
/// extended precision and accumulated as a log magnitude. Both rescalings
/// are undone exactly in log space.
template <typename Scalar>
LogValue<Scalar> disc_resultant_oracle(const Vector<Scalar> &coeffs) {
  using Work = long double;
  using std::abs;
  const Eigen::Index d = coeffs.size() - 1;
  if (d < 1)
    throw DomainError("resultant oracle needs degree >= 1");
  if (coeffs[d] == Scalar(0))
    throw DomainError("leading coefficient is zero");
  if (d == 1)
    return LogValue<Scalar>::one();

  const Work lead = Work(coeffs[d]);
  Vector<Work> monic(d + 1);
  for (Eigen::Index k = 0; k <= d; ++k)
    monic[k] = Work(coeffs[k]) / lead;

  // Fujiwara-style radius, rounded to a power of two so the scaling is exact.
  Work radius = 0;
  for (Eigen::Index k = 0; k < d; ++k)
    radius = std::max(radius, std::pow(std::abs(monic[k]), Work(1) / Work(d - k)));
  int exponent = 0;
  if (radius > 0)
    exponent = std::ilogb(radius);
  const Work s = std::ldexp(Work(1), exponent);
  for (Eigen::Index k = 0; k <= d; ++k)
    monic[k] = std::ldexp(monic[k], exponent * int(k - d));

  const Eigen::Index n = 2 * d - 1;
  Matrix<Work> syl = Matrix<Work>::Zero(n, n);
  for (Eigen::Index row = 0; row < d - 1; ++row)
    for (Eigen::Index k = 0; k <= d; ++k)
      syl(row, row + (d - k)) = monic[k];
  for (Eigen::Index row = 0; row < d; ++row)
    for (Eigen::Index k = 1; k <= d; ++k)
      syl(d - 1 + row, row + (d - k)) = Work(k) * monic[k];

  Eigen::PartialPivLU<Matrix<Work>> lu(syl);
  const Matrix<Work> &factored = lu.matrixLU();
  LogValue<Work> det = LogValue<Work>::one();
  det.sign = int(lu.permutationP().determinant());
  for (Eigen::Index k = 0; k < n; ++k)
    det *= factored(k, k);
  if (det.is_zero())
    return LogValue<Scalar>::zero();

  // Disc(f) = (-1)^{d(d-1)/2} Res(f, f') / c_d for the monic scaled polynomial.
  if (((d * (d - 1) / 2) % 2) != 0)
    det.sign = -det.sign;
  LogValue<Scalar> out;
  out.sign = det.sign;
  out.log_abs = Scalar(det.log_abs + Work(d * (d - 1)) * std::log(s) +
                       Work(2 * d - 2) * std::log(std::abs(lead))); // c_d^{2d-2} > 0
  return out;
}

namespace detail {

template <typename Scalar>
Scalar bisect_root(const Vector<Scalar> &g, Scalar lo, Scalar hi, Scalar f_lo) {
  for (int it = 0; it < 2000; ++it) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (mid <= lo || mid >= hi)
      break;
    const Scalar f_mid = horner(g, mid);
    if (f_mid == Scalar(0))
      return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / Scalar(2);
}

template <typename Scalar>
Scalar abs_scale(const Vector<Scalar> &g, Scalar x) {
  using std::abs;
  Scalar acc(0);
  for (Eigen::Index k = g.size(); k-- > 0;)
    acc = acc * abs(x) + abs(g[k]);
  return acc;
}

} // namespace detail

/// Real roots (with multiplicity where detectable) of a real polynomial, ascending.
///
/// Critical points, found recursively from the derivative, split the line
/// into monotone pieces; each piece holds at most one root, isolated by a
/// sign change and refined by bisection. A critical point where the value
/// vanishes to rounding is reported as a double root.
template <typename Scalar>
std::vector<Scalar> real_roots(Vector<Scalar> g) {
  using std::abs;
  using std::max;
  using std::pow;
  Eigen::Index n = g.size() - 1;
  while (n > 0 && g[n] == Scalar(0))
    --n;
  g.conservativeResize(n + 1);
  if (n <= 0)
    return {};
  if (n == 1)
    return {-g[0] / g[1]};

  const std::vector<Scalar> critical = real_roots(derivative(g));
  Scalar bound(0);
  for (Eigen::Index k = 0; k < n; ++k)
    bound = max(bound, abs(g[k] / g[n]));
  bound += Scalar(1);

  std::vector<Scalar> knots;
  knots.push_back(-bound);
  for (Scalar c : critical)
    if (c > -bound && c < bound)
      knots.push_back(c);
  knots.push_back(bound);

  std::vector<Scalar> values(knots.size());
  std::vector<bool> vanishing(knots.size(), false);
  for (std::size_t i = 0; i < knots.size(); ++i) {
    values[i] = horner(g, knots[i]);
    const bool interior = i > 0 && i + 1 < knots.size();
    if (interior && abs(values[i]) <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() *
                                           detail::abs_scale(g, knots[i])) {
      vanishing[i] = true;
      values[i] = Scalar(0);
    }
  }

  std::vector<Scalar> roots;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (vanishing[i]) {
      // skip repeated critical points that collapse onto the same root
      if (i > 0 && vanishing[i - 1] && knots[i] == knots[i - 1])
        continue;
      roots.push_back(knots[i]);
      roots.push_back(knots[i]);
    }
    if (i + 1 == knots.size())
      break;
    const Scalar lo = values[i], hi = values[i + 1];
    if (lo == Scalar(0) || hi == Scalar(0))
      continue;
    if ((lo < 0) != (hi < 0))
      roots.push_back(detail::bisect_root(g, knots[i], knots[i + 1], lo));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Roots of an even (g(x^2)) or odd (x g(x^2)) polynomial through the half-degree g.
///
/// Returns std::nullopt when not all d roots are real. Throws StructureError
/// when the coefficients of the wrong parity are not zero.
template <typename Scalar>
std::optional<Vector<Scalar>> even_odd_structured_roots(const Vector<Scalar> &coeffs) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index d = coeffs.size() - 1;
  if (d < 1)
    throw DomainError("structured root finder needs degree >= 1");
  if (coeffs[d] == Scalar(0))
    throw DomainError("leading coefficient is zero");
  const Scalar scale = coeffs.cwiseAbs().maxCoeff();
  const Eigen::Index parity = d % 2;
  for (Eigen::Index k = 0; k <= d; ++k)
    if (k % 2 != parity && abs(coeffs[k]) > Scalar(tol::structure) * scale)
      throw StructureError("coefficient of x^" + std::to_string(k) +
                           " breaks the even/odd structure");

  const Eigen::Index half = d / 2;
  Vector<Scalar> g(half + 1);
  for (Eigen::Index j = 0; j <= half; ++j)
    g[j] = coeffs[2 * j + parity];

  const std::vector<Scalar> u_roots = real_roots(g);
  if (Eigen::Index(u_roots.size()) != half)
    return std::nullopt;

  std::vector<Scalar> x;
  x.reserve(std::size_t(d));
  const Scalar u_floor = Scalar(tol::structure) * (Scalar(1) + abs(g[0] / g[half]));
  for (Scalar u : u_roots) {
    if (u < -u_floor)
      return std::nullopt;
    const Scalar r = u > 0 ? sqrt(u) : Scalar(0);
    x.push_back(-r);
    x.push_back(r);
  }
  if (parity == 1)
    x.push_back(Scalar(0));
  std::sort(x.begin(), x.end());
  return Eigen::Map<const Vector<Scalar>>(x.data(), Eigen::Index(x.size()));
}

/// Discriminant of x^4 + c2 x^2 + c0.
template <typename Scalar>
Scalar quartic_disc(Scalar c2, Scalar c0) {
  const Scalar c2sq = c2 * c2;
  return Scalar(256) * c0 * c0 * c0 - Scalar(128) * c2sq * c0 * c0 + Scalar(16) * c2sq * c2sq * c0;
}

/// Discriminant of x^5 + c2 x^3 + c0 x, the quartic value times c0^2.
template <typename Scalar>
Scalar quintic_disc(Scalar c2, Scalar c0) {
  return quartic_disc(c2, c0) * c0 * c0;
}

} // namespace extremal
