#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace extremal {

/// Sign and natural-log magnitude of a real quantity that may overflow a double.
///
/// `log_abs` carries no meaning when `sign == 0`.
template <typename Scalar = double>
struct LogValue {
  int sign = 0;
  Scalar log_abs = -std::numeric_limits<Scalar>::infinity();

  static LogValue zero() { return {}; }
  static LogValue one() { return {1, Scalar(0)}; }

  static LogValue from(Scalar x) {
    using std::abs;
    using std::log;
    if (x == Scalar(0))
      return zero();
    return {x > 0 ? 1 : -1, log(abs(x))};
  }

  bool is_zero() const { return sign == 0; }

  LogValue &operator*=(Scalar x) {
    using std::abs;
    using std::log;
    if (x == Scalar(0)) {
      *this = zero();
    } else if (sign != 0) {
      log_abs += log(abs(x));
      if (x < 0)
        sign = -sign;
    }
    return *this;
  }

  /// Multiplies by x^e for an integer exponent e (negative allowed, x != 0 then).
  LogValue &mul_pow(Scalar x, long e) {
    using std::abs;
    using std::log;
    if (e == 0)
      return *this;
    if (x == Scalar(0)) {
      *this = zero();
      return *this;
    }
    if (sign != 0) {
      log_abs += Scalar(e) * log(abs(x));
      if (x < 0 && (e % 2 != 0))
        sign = -sign;
    }
    return *this;
  }

  LogValue &operator*=(const LogValue &o) {
    if (o.sign == 0 || sign == 0) {
      *this = zero();
    } else {
      sign *= o.sign;
      log_abs += o.log_abs;
    }
    return *this;
  }

  /// Linear value; overflows to +-inf when log_abs is large.
  Scalar value() const {
    using std::exp;
    if (sign == 0)
      return Scalar(0);
    return Scalar(sign) * exp(log_abs);
  }
};

using LogDiscriminant = LogValue<double>;

/// Symmetric relative distance between two log magnitudes; scale floored at 1
/// so values of log_abs close to zero are compared absolutely.
inline double log_rel_diff(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::max(std::abs(lhs), std::abs(rhs)));
}

} // namespace extremal
