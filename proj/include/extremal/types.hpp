#pragma once

#include <complex>

#include <Eigen/Dense>

namespace extremal {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXd = Vector<double>;

template <typename Scalar>
using Complex = std::complex<Scalar>;

using ComplexValue = Complex<double>;

/// Numeric tolerances shared across modules.
namespace tol {
inline constexpr double eval = 1e-10;
inline constexpr double oracle = 1e-8;
inline constexpr double structure = 1e-12;
} // namespace tol

} // namespace extremal
