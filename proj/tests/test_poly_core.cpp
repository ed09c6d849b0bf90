#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "extremal/poly_core.hpp"
#include "test_support.hpp"

using namespace extremal;
using testing::rel_err;

namespace {

VectorXd vec(std::initializer_list<double> xs) {
  VectorXd v(Eigen::Index(xs.size()));
  std::copy(xs.begin(), xs.end(), v.data());
  return v;
}

} // namespace

TEST_CASE("poly_from_roots expands linear factors") {
  CHECK(poly_from_roots({-1.0, 1.0}).coeffs().isApprox(vec({-1, 0, 1})));

  const double s3 = std::sqrt(3.0);
  const auto cubic = poly_from_roots({0.0, s3, -s3});
  CHECK(cubic.coeffs().isApprox(vec({0, -3, 0, 1}), 1e-14));
  CHECK(cubic.roots()[0] == doctest::Approx(-s3));

  CHECK(poly_from_roots({1.0, 2.0, -1.0, -2.0}).coeffs().isApprox(vec({4, 0, -5, 0, 1})));
}

TEST_CASE("poly_from_roots rejects bad input") {
  CHECK_THROWS_AS(poly_from_roots({1.0}), DomainError);
  CHECK_THROWS_AS(poly_from_roots({1.0, std::nan("")}), InputError);
  CHECK_THROWS_AS(poly_from_roots({1.0, INFINITY}), InputError);
}

TEST_CASE("monic and roots satisfy the coefficient form") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(2, 8);
    const auto p = RealRootedPoly<double>(testing::separated_roots(rng, d, 5.0, 0.1));
    CHECK(p.coeffs()[d] == 1.0);
    for (int k = 0; k < d; ++k) {
      const double x = p.roots()[k];
      double scale = 0.0;
      for (int j = 0; j <= d; ++j)
        scale = std::max(scale, std::abs(p.coeffs()[j] * std::pow(x, j)));
      CHECK(std::abs(horner(p.coeffs(), x)) <= tol::eval * scale);
    }
  }
}

TEST_CASE("eval_at uses the product form") {
  const ComplexValue i(0, 1);
  CHECK(std::abs(eval_at(poly_from_roots({-1.0, 1.0}), i) - ComplexValue(-2, 0)) < 1e-15);
  const double s3 = std::sqrt(3.0);
  const auto v = eval_at(poly_from_roots({-s3, 0.0, s3}), i);
  CHECK(std::abs(v - ComplexValue(0, -4)) < 1e-14);
  // x^4 - 6x^2 + 1 at i: 1 + 6 + 1
  const double r1 = std::sqrt(3.0 - 2.0 * std::sqrt(2.0)), r2 = std::sqrt(3.0 + 2.0 * std::sqrt(2.0));
  CHECK(std::abs(eval_at(poly_from_roots({-r2, -r1, r1, r2}), i) - ComplexValue(8, 0)) < 1e-13);
}

TEST_CASE("modulus_at_ai") {
  CHECK(modulus_at_ai(poly_from_roots({0.0, 0.0, 0.0}), 1.0) == doctest::Approx(1.0));
  CHECK(modulus_at_ai(poly_from_roots({-1.0, 1.0}), 1.0) == doctest::Approx(2.0));
  CHECK(modulus_at_ai(poly_from_roots({1.0, -1.0, 2.0, -2.0}), 1.0) == doctest::Approx(10.0));
  CHECK_THROWS_AS(modulus_at_ai(poly_from_roots({1.0, 2.0}), 0.0), DomainError);
  CHECK_THROWS_AS(modulus_at_ai(poly_from_roots({1.0, 2.0}), -1.0), DomainError);
}

TEST_CASE("modulus_at_ai is at least a^d") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.integer(2, 8);
    const double a = rng.uniform(0.1, 3.0);
    VectorXd r(d);
    for (int k = 0; k < d; ++k)
      r[k] = rng.uniform(-2, 2);
    CHECK(modulus_at_ai(RealRootedPoly<double>(r), a) > std::pow(a, d));
  }
}

TEST_CASE("log_disc_from_roots") {
  auto d2 = log_disc_from_roots(poly_from_roots({-1.0, 1.0}));
  CHECK(d2.sign == 1);
  CHECK(d2.log_abs == doctest::Approx(std::log(4.0)));
  const double s3 = std::sqrt(3.0);
  CHECK(log_disc_from_roots(poly_from_roots({0.0, s3, -s3})).log_abs ==
        doctest::Approx(std::log(108.0)));
  CHECK(log_disc_from_roots(poly_from_roots({0.7, 0.7})).sign == 0);
}

TEST_CASE("disc_resultant_oracle on coefficient vectors") {
  CHECK(disc_resultant_oracle(vec({-1, 0, 1})).value() == doctest::Approx(4.0));
  CHECK(disc_resultant_oracle(vec({1, 0, -6, 0, 1})).value() == doctest::Approx(16384.0));
  CHECK(disc_resultant_oracle(vec({4, 0, -5, 0, 1})).value() == doctest::Approx(5184.0));
  // non-monic: disc(2x^2 - 2) = 2^2 * 4
  CHECK(disc_resultant_oracle(vec({-2, 0, 2})).value() == doctest::Approx(16.0));
  // complex roots give a negative discriminant: x^2 + 1 -> -4
  const auto neg = disc_resultant_oracle(vec({1, 0, 1}));
  CHECK(neg.sign == -1);
  CHECK(neg.value() == doctest::Approx(-4.0));
  CHECK(disc_resultant_oracle(vec({1, -2, 1})).sign == 0);
  CHECK_THROWS_AS(disc_resultant_oracle(vec({1, 2, 0})), DomainError);
}

TEST_CASE("resultant oracle agrees with root products") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = rng.integer(2, 8);
    const RealRootedPoly<double> p(testing::separated_roots(rng, d, 10.0, 0.1));
    const auto from_roots = log_disc_from_roots(p);
    const auto from_coeffs = disc_resultant_oracle(p.coeffs());
    REQUIRE(from_coeffs.sign == 1);
    CHECK(log_rel_diff(from_roots.log_abs, from_coeffs.log_abs) <= tol::oracle);
  }
}

TEST_CASE("even_odd_structured_roots") {
  auto r2 = even_odd_structured_roots(vec({-1, 0, 1}));
  REQUIRE(r2);
  CHECK((*r2 - vec({-1, 1})).cwiseAbs().maxCoeff() < 1e-15);

  auto r4 = even_odd_structured_roots(vec({1, 0, -6, 0, 1}));
  REQUIRE(r4);
  const double lo = std::sqrt(3.0 - 2.0 * std::sqrt(2.0)), hi = std::sqrt(3.0 + 2.0 * std::sqrt(2.0));
  CHECK((*r4 - vec({-hi, -lo, lo, hi})).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_FALSE(even_odd_structured_roots(vec({1, 0, 1, 0, 1})));
  // u-roots real but one negative: (u - 1)(u + 2)
  CHECK_FALSE(even_odd_structured_roots(vec({-2, 0, 1, 0, 1})));
  // odd structure: x^3 - 3x
  auto r3 = even_odd_structured_roots(vec({0, -3, 0, 1}));
  REQUIRE(r3);
  CHECK(std::abs((*r3)[1]) < 1e-15);
  CHECK((*r3)[2] == doctest::Approx(std::sqrt(3.0)));

  CHECK_THROWS_AS(even_odd_structured_roots(vec({-1, 0.5, 1})), StructureError);
  CHECK_THROWS_AS(even_odd_structured_roots(vec({1, 0, 1, 1})), StructureError);
}

TEST_CASE("structured roots reproduce the input coefficients") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int half = rng.integer(1, 4);
    const bool odd = rng.uniform() < 0.5;
    // build an even/odd real-rooted polynomial from distinct positive u-roots
    VectorXd u = testing::separated_roots(rng, half, 4.0, 0.05).array() + 4.2;
    std::vector<double> x;
    for (int k = 0; k < half; ++k) {
      x.push_back(std::sqrt(u[k]));
      x.push_back(-std::sqrt(u[k]));
    }
    if (odd)
      x.push_back(0.0);
    const RealRootedPoly<double> p(Eigen::Map<VectorXd>(x.data(), Eigen::Index(x.size())));
    VectorXd c = p.coeffs();
    for (Eigen::Index k = 0; k < c.size(); ++k)
      if ((k % 2) != (c.size() - 1) % 2)
        c[k] = 0.0; // remove rounding noise in the structurally zero slots
    auto roots = even_odd_structured_roots(c);
    REQUIRE(roots);
    const VectorXd back = RealRootedPoly<double>(*roots).coeffs();
    const double scale = c.cwiseAbs().maxCoeff();
    CHECK((back - c).cwiseAbs().maxCoeff() <= 1e-8 * scale);
  }
}

TEST_CASE("real_roots finds repeated roots at critical points") {
  // (u - 1)^2 (u - 3)
  const auto r = real_roots(vec({-3, 7, -5, 1}));
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(1.0));
  CHECK(r[2] == doctest::Approx(3.0));
}

TEST_CASE("quartic and quintic closed-form discriminants") {
  CHECK(quartic_disc(-6.0, 1.0) == doctest::Approx(16384.0));
  CHECK(quartic_disc(0.0, 0.0) == 0.0);
  CHECK(quartic_disc(-5.0, 4.0) == doctest::Approx(5184.0));

  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const double c2 = rng.uniform(-5, 5), c0 = rng.uniform(-5, 5);
    const auto q4 = disc_resultant_oracle(vec({c0, 0, c2, 0, 1}));
    const auto q5 = disc_resultant_oracle(vec({0, c0, 0, c2, 0, 1}));
    CHECK(rel_err(quartic_disc(c2, c0), q4.value()) <= 1e-10);
    CHECK(rel_err(quintic_disc(c2, c0), q5.value()) <= 1e-10);
  }
}

TEST_CASE("templated on scalar: long double instantiation") {
  Vector<long double> r(3);
  r << -1.5L, 0.25L, 2.0L;
  const RealRootedPoly<long double> p(r);
  const auto from_roots = log_disc_from_roots(p);
  const auto from_coeffs = disc_resultant_oracle(p.coeffs());
  CHECK(std::abs(double(from_roots.log_abs - from_coeffs.log_abs)) < 1e-12);
}
