#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperlaplace/combinatorics.hpp"
#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/quadrature.hpp"
#include "oracles.hpp"

using namespace hyperlaplace;
using std::numbers::pi;

TEST_CASE("poly low degrees") {
  for (int d = 3; d <= 9; ++d) {
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) CHECK(poly(0, d, x) == 1.0);
  }
  CHECK(poly(1, 5, 0.5) == doctest::Approx(1.5));
  CHECK(std::abs(poly(2, 3, 0.3) - (-0.365)) <= 1e-15);
  CHECK(poly(2, 3, 0.0) == -0.5);
  CHECK_THROWS_AS(poly(-1, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(poly(2, 2, 0.0), std::invalid_argument);
}

// Values of C^{(d-2)/2}_l(x) from an independent 30-digit evaluation.
TEST_CASE("poly against frozen high-precision values") {
  CHECK(poly(5, 6, 0.3) == doctest::Approx(3.34656).epsilon(1e-14));
  CHECK(poly(7, 5, -0.6) == doctest::Approx(-2.439936).epsilon(1e-14));
  CHECK(poly(4, 4, 0.85) == doctest::Approx(0.6821).epsilon(1e-14));
  CHECK(poly(10, 8, 0.45) == doctest::Approx(-27.9388319034).epsilon(1e-12));
}

TEST_CASE("recurrence agrees with the binomial expansion") {
  for (int d = 3; d <= 8; ++d) {
    for (int l = 0; l <= 10; ++l) {
      CHECK(poly_reference(l, d, 1.0) == doctest::Approx(binomial(l + d - 3, l)));
      for (int i = 0; i <= 20; ++i) {
        const double x = -1.0 + 0.1 * i;
        CHECK(std::abs(poly(l, d, x) - poly_reference(l, d, x)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("generating function partial sums") {
  // r = 0.4 with 30 terms leaves a tail below 1e-10 for d <= 4 and interior x.
  const double r = 0.4;
  for (int d : {3, 4}) {
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      double s = 0.0;
      for (int l = 0; l <= 30; ++l) s += std::pow(r, l) * poly_reference(l, d, x);
      CHECK(std::abs(s - std::pow(1 + r * r - 2 * r * x, -(d - 2) / 2.0)) <= 1e-10);
    }
  }
}

TEST_CASE("alpha factor") {
  CHECK(alpha_factor(0, 7) == 1.0);
  CHECK(alpha_factor(1, 5) == 3.0);
  CHECK(alpha_factor(2, 3) == 3.0);
  CHECK(alpha_factor(3, 4) == 2.0 * 4.0 * 6.0);
}

TEST_CASE("poly_deriv") {
  CHECK(poly_deriv(4, 0, 5, 0.3) == poly(4, 5, 0.3));
  CHECK(poly_deriv(3, 4, 3, 0.2) == 0.0);
  const double fd = oracle::fd_derivative([](double x) { return poly(3, 3, x); }, 0.2, 1);
  CHECK(std::abs(poly_deriv(3, 1, 3, 0.2) - fd) <= 1e-8);
  for (int d = 3; d <= 6; ++d) {
    for (int l = 0; l <= 6; ++l) {
      for (int m = 1; m <= 3; ++m) {
        for (double x : {-0.9, -0.25, 0.4, 1.0}) {
          const double exact = poly_deriv(l, m, d, x);
          const double approx = oracle::fd_derivative([&](double t) { return poly(l, d, t); }, x, m);
          CHECK(std::abs(exact - approx) <= 1e-8 * std::max(1.0, std::abs(exact)));
        }
      }
    }
  }
}

TEST_CASE("derivatives at x = 1") {
  for (int l = 0; l <= 10; ++l) CHECK(deriv_at_one(l, 0, 3) == 1.0);
  CHECK(deriv_at_one(4, 1, 3) == 10.0);
  CHECK(deriv_at_one(2, 0, 5) == 6.0);
  CHECK(poly(2, 5, 1.0) == 6.0);
  CHECK(deriv_at_one(2, 3, 5) == 0.0);
  for (int d = 3; d <= 7; ++d) {
    for (int l = 0; l <= 8; ++l) {
      for (int n = 0; n <= l; ++n) {
        const double direct = poly_deriv(l, n, d, 1.0);
        CHECK(std::abs(deriv_at_one(l, n, d) - direct) <= 1e-10 * direct);
      }
    }
  }
}

TEST_CASE("associated functions") {
  CHECK(assoc(3, 0, 5, 0.7) == poly(3, 5, std::cos(0.7)));
  CHECK(assoc(1, 1, 3, pi / 2) == doctest::Approx(1.0));
  CHECK(assoc(4, 2, 3, 0.0) == 0.0);
  CHECK(assoc(2, 3, 4, 1.0) == 0.0);
  // frozen: sin^2(2) * C''^{(2)}_4(cos 2) from a 30-digit evaluation
  CHECK(assoc(4, 2, 6, 2.0) == doctest::Approx(58.085110255580251).epsilon(1e-13));
  for (int l = 0; l <= 5; ++l) {
    for (int m = l + 1; m <= l + 2; ++m) CHECK(assoc(l, m, 5, 1.3) == 0.0);
  }
}

TEST_CASE("normalization factor") {
  CHECK(norm_factor(0, 0, 4) == doctest::Approx(std::sqrt(2.0 / pi)));
  CHECK(norm_factor(1, 0, 3) == doctest::Approx(std::sqrt(1.5)));
  CHECK((2.0 / pi) * oracle::sine_power(2) == doctest::Approx(1.0));
  CHECK(1.5 * oracle::sine_cosine_moment(1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(norm_factor(2, 3, 4), std::invalid_argument);

  // Independent quadrature: composite Simpson, not the Gauss rules.
  for (int d = 3; d <= 7; ++d) {
    for (int l = 0; l <= 6; ++l) {
      for (int n = 0; n <= l; ++n) {
        const double integral = oracle::simpson([&](double t) {
          const double p = assoc(l, n, d, t);
          return std::pow(std::sin(t), d - 2) * p * p;
        });
        const double nf = norm_factor(l, n, d);
        CHECK(std::abs(nf * nf * integral - 1.0) <= 1e-9);
      }
    }
  }
}

TEST_CASE("same-order associated functions are orthogonal") {
  for (int d = 3; d <= 7; ++d) {
    const auto rule = theta_rule(d - 2, 8);
    for (int m = 0; m <= 6; ++m) {
      for (int l = m; l <= 6; ++l) {
        for (int lp = l + 1; lp <= 6; ++lp) {
          double q = 0.0;
          for (std::size_t i = 0; i < rule.size(); ++i) {
            q += rule.weights[i] * assoc(l, m, d, rule.nodes[i]) * assoc(lp, m, d, rule.nodes[i]);
          }
          CHECK(std::abs(q) * norm_factor(l, m, d) * norm_factor(lp, m, d) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("ODE residual") {
  CHECK(ode_residual(0, 0, 5, 1.0) == 0.0);
  {
    const double p = assoc(2, 1, 3, 1.0);
    CHECK(std::abs(ode_residual(2, 1, 3, 1.0)) <= 1e-9 * std::max(1.0, std::abs(p) * 6));
  }
  CHECK(std::abs(ode_residual(4, 2, 6, 2.0)) <= 1e-9 * ode_term_scale(4, 2, 6, 2.0));
  for (int d = 3; d <= 6; ++d) {
    for (int l = 0; l <= 5; ++l) {
      for (int m = 0; m <= l; ++m) {
        for (int i = 0; i < 10; ++i) {
          const double t = 0.1 + (pi - 0.2) * i / 9.0;
          CHECK(std::abs(ode_residual(l, m, d, t)) <= 1e-9 * std::max(1.0, ode_term_scale(l, m, d, t)));
        }
      }
    }
  }
  CHECK_THROWS_AS(ode_residual(2, 1, 4, 1e-4), std::domain_error);
  CHECK_THROWS_AS(ode_residual(2, 1, 4, pi), std::domain_error);
}

TEST_CASE("exact combinatorics") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(20) == 2432902008176640000.0);
  CHECK(factorial(25) == doctest::Approx(1.5511210043330986e25).epsilon(1e-14));
  CHECK(binomial_exact(10, 3).value() == 120u);
  CHECK(binomial_exact(66, 33).value() == 7219428434016265740ull);
  CHECK_FALSE(binomial_exact(70, 35).has_value());
  CHECK(binomial(70, 35) == doctest::Approx(1.1218627781666285e20).epsilon(1e-12));
}
