#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ldg/problems.hpp"

using namespace ldg;

TEST_CASE("catalog names and admissibility") {
  for (const char* name : {"poly_patch", "layer_const", "layer_var"}) {
    const auto p = make_problem(name, 1e-3);
    CHECK(p.has_exact);
    CHECK(p.weight_min > 0.0);
  }
  CHECK_THROWS_AS(make_problem("nonexistent", 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("layer_const", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("layer_const", 1.0), std::invalid_argument);
}

TEST_CASE("layer_const boundary values and midpoint") {
  const auto p = make_problem("layer_const", 1e-2);
  for (double y : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    CHECK(p.u(1.0, y) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.u(0.0, y) == doctest::Approx(0.0).epsilon(1e-15));
  }
  // u(1/2,1/2) = 0.25*(1 - e^-50)^2
  const double g = 0.5 * (1.0 - std::exp(-50.0));
  CHECK(p.u(0.5, 0.5) == doctest::Approx(g * g).epsilon(1e-14));
  CHECK(p.u(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("layer_var coefficients") {
  const auto p = make_problem("layer_var", 1e-2);
  CHECK(p.a1(0.5, 0.0) == doctest::Approx(2.5));
  CHECK(p.a2(0.0, 0.25) == doctest::Approx(2.25));
  CHECK(p.b(0.1, 0.9) == doctest::Approx(4.0));
  CHECK(p.div_alpha(0.3, 0.3) == doctest::Approx(2.0));
  CHECK(p.weight_min == doctest::Approx(3.0));
}

TEST_CASE("first-order system accessors are consistent") {
  const auto p = make_problem("layer_const", 1e-2);
  // p = eps*u_x and q = eps*u_y by construction; spot-check u_x against FD.
  const double x = 0.7, y = 0.4, d = 1e-6;
  const double fd = (p.u(x + d, y) - p.u(x - d, y)) / (2 * d);
  CHECK(p.u_x(x, y) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("poly_patch residual vanishes to roundoff") {
  const auto p = make_problem("poly_patch", 1e-3);
  CHECK(residual_check(p, 21) <= 1e-10);
}

TEST_CASE("layer problems pass the finite-difference residual oracle") {
  for (const char* name : {"layer_const", "layer_var"}) {
    for (double eps : {1e-2, 1e-3}) {
      const auto p = make_problem(name, eps);
      double max_f = 0.0;
      for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) max_f = std::max(max_f, std::abs(p.f(i / 100.0, j / 100.0)));
      const double res = residual_check(p, 21);
      INFO(name, " eps=", eps, " residual=", res, " max|f|=", max_f);
      CHECK(res <= 1e-6 * max_f);
    }
  }
}

TEST_CASE("residual_check requires an exact solution") {
  auto p = make_problem("layer_const", 1e-2);
  p.has_exact = false;
  CHECK_THROWS_AS(residual_check(p, 11), std::invalid_argument);
}
