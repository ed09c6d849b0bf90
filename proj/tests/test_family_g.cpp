#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "small_degree_values.hpp"
#include "extremal/family_f.hpp"
#include "extremal/family_g.hpp"
#include "test_support.hpp"

using namespace extremal;
using testing::rel_err;

namespace {

VectorXd vec(std::initializer_list<double> xs) {
  VectorXd v(Eigen::Index(xs.size()));
  std::copy(xs.begin(), xs.end(), v.data());
  return v;
}

double max_diff(const VectorXd &x, const VectorXd &y) {
  REQUIRE(x.size() == y.size());
  return (x - y).cwiseAbs().maxCoeff();
}

bool is_pole(int d, double lambda) {
  for (int j = 1; 2 * j <= d; ++j)
    if (std::abs(lambda - 2 * d + 2 * j + 1) <= 1e-6)
      return true;
  return false;
}

} // namespace

TEST_CASE("g_coeffs examples") {
  CHECK(max_diff(g_coeffs({1.0, 3, 4.0}), vec({0, -3, 0, 1})) < 1e-15);
  CHECK(max_diff(g_coeffs({1.0, 2, 3.0}), vec({-0.5, 0, 1})) < 1e-15);
  CHECK(max_diff(g_coeffs({1.0, 4, 6.0}), vec({1, 0, -6, 0, 1})) < 1e-14);
  // pole at lambda = 2d - 3 for j = 1
  CHECK_THROWS_WITH_AS(g_coeffs({1.0, 4, 5.0}), doctest::Contains("j = 1"), PoleError);
  CHECK_THROWS_AS(g_coeffs({1.0, 5, 5.0}), PoleError);
  const VectorXd c = g_coeffs({1.3, 7, 20.5});
  for (int k = 0; k <= 7; ++k)
    if ((7 - k) % 2 == 1)
      CHECK(c[k] == 0.0);
}

TEST_CASE("solve_lambda0 examples") {
  CHECK(solve_lambda0(1.0, 2, 1.5) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(solve_lambda0(1.0, 4, 8.0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(solve_lambda0(1.0, 3, 4.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(solve_lambda0(1.0, 4, 2.0) == doctest::Approx(7.0 + std::sqrt(19.0)).epsilon(1e-12));
  CHECK_THROWS_AS(solve_lambda0(1.0, 3, 5.0), RegimeError);
  CHECK_THROWS_AS(solve_lambda0(1.0, 3, 1.0), RegimeError);
  CHECK_THROWS_AS(solve_lambda0(1.0, 3, 0.5), RegimeError);
}

TEST_CASE("solve_lambda0 matches the quadratic for d = 4 and d = 5") {
  for (int i = 1; i <= 20; ++i) {
    const double m4 = 1.0 + 7.0 * i / 20.0;
    CHECK(rel_err(solve_lambda0(1.0, 4, m4),
                  (4 * m4 - 1 + std::sqrt(m4 * m4 + 7 * m4 + 1)) / (m4 - 1)) <= 1e-12);
    // for d = 5 the constraint reads m - 1 = 10/(l-7) + 15/((l-7)(l-5))
    const double m5 = 1.0 + 15.0 * i / 20.0;
    const double l = solve_lambda0(1.0, 5, m5);
    CHECK(rel_err(1.0 + 10 / (l - 7) + 15 / ((l - 7) * (l - 5)), m5) <= 1e-12);
  }
}

TEST_CASE("g_disc_closed examples") {
  CHECK(g_disc_closed({1.0, 2, 3.0}).value() == doctest::Approx(2.0));
  CHECK(g_disc_closed({1.0, 3, 4.0}).value() == doctest::Approx(108.0));
  CHECK(g_disc_closed({1.0, 4, 6.0}).value() == doctest::Approx(16384.0));
  CHECK_THROWS_AS(g_disc_closed({1.0, 4, 5.0}), PoleError);
  for (double lambda : {3.5, 5.0, 12.0})
    CHECK(g_disc_closed({1.0, 2, lambda}).value() == doctest::Approx(4.0 / (lambda - 1)));
}

TEST_CASE("closed-form discriminant agrees with the resultant oracle") {
  testing::Rng rng(2024);
  for (int d = 2; d <= 8; ++d)
    for (double a : {0.5, 1.0, 2.0})
      for (int trial = 0; trial < 20; ++trial) {
        const double lambda = rng.uniform(2 * d - 2, 6 * d);
        const GFamilyParams params{a, d, lambda};
        const auto closed = g_disc_closed(params);
        const auto oracle = disc_resultant_oracle(g_coeffs(params));
        CHECK(closed.sign == oracle.sign);
        CHECK(log_rel_diff(closed.log_abs, oracle.log_abs) <= 1e-8);
      }
  // below 2d - 2 (off the poles) the formula still holds, including sign
  for (int d = 3; d <= 8; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      const double lambda = rng.uniform(-2.0, 2 * d - 2);
      if (is_pole(d, lambda))
        continue;
      bool near_root = false;
      for (int k = 1; 2 * k < d; ++k)
        near_root = near_root || std::abs(lambda - 2 * k) < 1e-3;
      if (near_root)
        continue;
      const GFamilyParams params{1.0, d, lambda};
      const auto closed = g_disc_closed(params);
      const auto oracle = disc_resultant_oracle(g_coeffs(params));
      CHECK(closed.sign == oracle.sign);
      CHECK(log_rel_diff(closed.log_abs, oracle.log_abs) <= 1e-7);
    }
}

TEST_CASE("constraint consistency and boundary gluing") {
  testing::Rng rng(7);
  for (int d = 2; d <= 8; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      const double a = rng.uniform(0.3, 2.5);
      const double ratio = 1.0 + (std::ldexp(1.0, d - 1) - 1.0) * rng.uniform(0.01, 1.0);
      const double m = ratio * std::pow(a, d);
      const double lambda0 = solve_lambda0(a, d, m);
      CHECK(lambda0 >= 2 * d - 2);
      const auto roots = even_odd_structured_roots(g_coeffs({a, d, lambda0}));
      REQUIRE(roots.has_value());
      CHECK(rel_err(modulus_at_ai(RealRootedPoly<double>(*roots), a), m) <= 1e-9);
    }
  for (int d = 2; d <= 10; ++d) {
    const double a = 1.7;
    const VectorXd g = g_coeffs({a, d, 2.0 * d - 2});
    const VectorXd f = f_coeffs({a, d, 0.0, 0.0});
    CHECK(max_diff(g, f) <= 1e-10 * f.cwiseAbs().maxCoeff());
    CHECK(solve_lambda0(a, d, std::ldexp(std::pow(a, d), d - 1)) ==
          doctest::Approx(2.0 * d - 2).epsilon(1e-12));
  }
}

TEST_CASE("small-degree discriminants through lambda0") {
  for (int d = 2; d <= 5; ++d)
    for (int i = 1; i <= 10; ++i) {
      const double m = 1.0 + (std::ldexp(1.0, d - 1) - 1.0) * i / 10.0;
      const auto disc = g_disc_closed({1.0, d, solve_lambda0(1.0, d, m)});
      CHECK(log_rel_diff(disc.log_abs, std::log(testing::small_degree_max_disc(d, m))) <= 1e-9);
    }
}

TEST_CASE("binomial sum identity") {
  for (int d = 2; d <= 30; ++d) {
    unsigned long long sum = 1, c = 1;
    // c runs over C(d, j)
    for (int j = 1; j <= d; ++j) {
      c = c * (d - j + 1) / j;
      if (j % 2 == 0)
        sum += c;
    }
    CHECK(sum == (1ULL << (d - 1)));
    CHECK(1.0 + constraint_excess(d, 1e300) == 1.0);
  }
}

TEST_CASE("Jacobi and Gegenbauer coefficients") {
  CHECK(max_diff(jacobi_coeffs({2, 0.0, 0.0}), vec({-0.5, 0, 1.5})) < 1e-15);
  CHECK(max_diff(jacobi_coeffs({1, 0.0, 0.0}), vec({0, 1})) < 1e-15);
  // (alpha+beta+3)_2 / 8 = (-5)(-4)/8
  CHECK(jacobi_coeffs({2, -4.0, -4.0})[2] == doctest::Approx(2.5));
  CHECK(max_diff(gegenbauer_coeffs(2, 1.0), vec({-1, 0, 4})) < 1e-15);
  CHECK(max_diff(gegenbauer_coeffs(1, 1.0), vec({0, 2})) < 1e-15);
  CHECK(max_diff(gegenbauer_coeffs(2, 0.5), vec({-0.5, 0, 1.5})) < 1e-15);

  testing::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = rng.integer(1, 9);
    const double alpha = rng.uniform(-10, 5), beta = rng.uniform(-10, 5);
    const VectorXd c = jacobi_coeffs({d, alpha, beta});
    double factorial = 1;
    for (int k = 2; k <= d; ++k)
      factorial *= k;
    const double lead = pochhammer(alpha + beta + d + 1, d) / (factorial * std::ldexp(1.0, d));
    CHECK(std::abs(c[d] - lead) <= 1e-10 * std::max(1.0, std::abs(lead)));
    // P_d^{(a,b)}(1) = C(d + alpha, d)
    const double at_one = horner(c, 1.0);
    const double expected = generalized_binomial(d + alpha, d);
    CHECK(std::abs(at_one - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("Jacobi-Gegenbauer relation") {
  CHECK(jacobi_gegenbauer_residual(2, 0.5) <= 1e-12);
  CHECK(jacobi_gegenbauer_residual(4, 2.0) <= 1e-10);
  CHECK(jacobi_gegenbauer_residual(5, -3.2) <= 1e-10);
  CHECK_THROWS_AS(jacobi_gegenbauer_residual(3, -0.5), DomainError);
  testing::Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(2, 8);
    const double mu = rng.uniform(-6, 6);
    bool near_zero = false;
    for (int k = 0; k < d; ++k)
      near_zero = near_zero || std::abs(2 * mu + k) < 1e-2;
    if (!near_zero)
      CHECK(jacobi_gegenbauer_residual(d, mu) <= 1e-10);
  }
}

TEST_CASE("G as a pseudo-Jacobi polynomial") {
  CHECK(g_jacobi_identity_residual({1.0, 2, 3.0}) <= 1e-12);
  CHECK(g_jacobi_identity_residual({2.0, 5, 9.7}) <= 1e-9);
  // at lambda = 2d - 2 the normalizing Pochhammer vanishes together with the
  // Jacobi polynomial, so the relation carries no information there
  CHECK_THROWS_AS(g_jacobi_identity_residual({1.0, 4, 6.0}), DomainError);
  CHECK(g_jacobi_identity_residual({1.0, 4, 6.5}) <= 1e-10);
  testing::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = rng.integer(2, 8);
    const double lambda = rng.uniform(2 * d - 1.9, 6 * d);
    CHECK(g_jacobi_identity_residual({rng.uniform(0.3, 3.0), d, lambda}) <= 1e-9);
  }
}

TEST_CASE("Jacobi discriminant") {
  CHECK(jacobi_disc({2, 0.0, 0.0}).value() == doctest::Approx(3.0));
  CHECK(disc_resultant_oracle(jacobi_coeffs({2, 0.0, 0.0})).value() == doctest::Approx(3.0));
  CHECK(jacobi_disc({2, -3.0, -3.0}).value() == doctest::Approx(-0.75));
  CHECK_THROWS_AS(jacobi_disc({3, -2.0, -2.0}), DomainError);

  testing::Rng rng(555);
  int off_classical = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.integer(2, 7);
    double alpha, beta;
    if (trial % 2 == 0) {
      alpha = beta = rng.uniform(-3.0 * d, -d - 0.0);
      ++off_classical;
    } else {
      alpha = rng.uniform(-6, 6);
      beta = rng.uniform(-6, 6);
    }
    bool excluded = false;
    for (int k = 1; k <= d; ++k)
      excluded = excluded || std::abs(alpha + beta + d + k) < 1e-2;
    for (int k = 1; k <= d; ++k)
      excluded = excluded || std::abs(k + alpha) < 1e-2 || std::abs(k + beta) < 1e-2;
    if (excluded)
      continue;
    const auto closed = jacobi_disc({d, alpha, beta});
    const auto oracle = disc_resultant_oracle(jacobi_coeffs({d, alpha, beta}));
    CHECK(closed.sign == oracle.sign);
    CHECK(log_rel_diff(closed.log_abs, oracle.log_abs) <= 1e-8);
  }
  CHECK(off_classical > 50);
}

TEST_CASE("degenerate multiplier family") {
  CHECK(max_diff(degenerate_family_coeffs(4, 1, 0.0), vec({-3, 0, 6, 0, 1})) < 1e-14);
  CHECK_NOTHROW(degenerate_family_coeffs(5, 2, -1.0));
  CHECK_THROWS_AS(degenerate_family_coeffs(4, 2, 1.0), DomainError);
  CHECK_THROWS_AS(degenerate_family_coeffs(4, 3, 1.0), DomainError);
  const VectorXd with_k = degenerate_family_coeffs(4, 1, 1.0);
  CHECK(max_diff(with_k, vec({-3, 1, 6, 0, 1})) < 1e-14);
  // K = 4 in degree 7 brings in the x^2 and x^0 terms from c_K
  const VectorXd k4 = degenerate_family_coeffs(7, 4, 1.0);
  CHECK(k4[4] == 1.0);
  CHECK(k4[2] == doctest::Approx(-6.0 / 5));
  CHECK(k4[0] == doctest::Approx(3.0 / 35));

  for (int d = 3; d <= 9; ++d)
    for (int K = 0; K <= d - 3; ++K) {
      if ((d - K) % 2 == 0)
        continue;
      for (double cK : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const VectorXd c = degenerate_family_coeffs(d, K, cK);
        CHECK(c[d] == 1.0);
        const int bound = descartes_real_root_bound(c);
        // certified when either the sign rule or an exact real root count
        // shows fewer than d real roots
        const bool certified = bound < d ||
                               (int)real_roots(c).size() < d;
        CHECK_MESSAGE(certified, "d=" << d << " K=" << K << " cK=" << cK);
      }
    }
}
