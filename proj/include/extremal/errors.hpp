#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (degree < 2, a <= 0, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed input such as non-finite roots.
class InputError : public Error {
public:
  using Error::Error;
};

/// Parameters fall outside the regime in which a closed form applies.
class RegimeError : public Error {
public:
  using Error::Error;
};

/// Coefficient vector lacks the even/odd structure an operation requires.
class StructureError : public Error {
public:
  using Error::Error;
};

/// A multiplier value hits a pole of a rational coefficient formula.
class PoleError : public Error {
public:
  using Error::Error;
};

/// A bracket sign check failed during a bisection that assumes monotonicity.
class MonotonicityError : public Error {
public:
  using Error::Error;
};

} // namespace extremal
