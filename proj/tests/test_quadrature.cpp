#include <doctest.h>

#include <cmath>
#include <random>

#include "ldg/quadrature.hpp"

using namespace ldg;

TEST_CASE("one point rule is the midpoint rule") {
  const auto r = gauss_legendre_rule(1);
  CHECK(r.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("two point rule") {
  const auto r = gauss_legendre_rule(2);
  CHECK(r.nodes[0] == doctest::Approx(-0.5773502691896257).epsilon(1e-14));
  CHECK(r.nodes[1] == doctest::Approx(0.5773502691896257).epsilon(1e-14));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("weights sum to 2 and nodes lie inside (-1,1)") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = gauss_legendre_rule(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += r.weights[i];
      CHECK(r.weights[i] > 0.0);
      CHECK(std::abs(r.nodes[i]) < 1.0);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("degree 2n-1 exactness on random polynomials") {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto r = gauss_legendre_rule(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> c(2 * n);  // degree 2n-1
      for (auto& v : c) v = dist(gen);
      // Exact integral over [-1,1] from the antiderivative: odd powers cancel.
      double exact = 0.0;
      for (size_t d = 0; d < c.size(); d += 2) exact += 2.0 * c[d] / (d + 1.0);
      double quad = 0.0;
      for (int q = 0; q < n; ++q) {
        double p = 0.0, xp = 1.0;
        for (double cd : c) {
          p += cd * xp;
          xp *= r.nodes[q];
        }
        quad += r.weights[q] * p;
      }
      CHECK(std::abs(quad - exact) <= 1e-14 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("legendre values and endpoints") {
  const auto r = gauss_legendre_rule(5);
  const auto table = legendre_table(4, r.nodes);
  for (int q = 0; q < 5; ++q) CHECK(table.val(q, 0) == 1.0);
  for (int q = 0; q < 5; ++q) CHECK(table.val(q, 1) == doctest::Approx(r.nodes[q]).epsilon(1e-15));
  for (int m = 0; m <= 4; ++m) {
    CHECK(table.at_right[m] == 1.0);
    CHECK(table.at_left[m] == ((m % 2 == 0) ? 1.0 : -1.0));
  }
  // P_2(0.5) = (3*0.25 - 1)/2 = -0.125
  double vals[3], ders[3];
  legendre_eval(2, 0.5, vals, ders);
  CHECK(vals[2] == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("orthogonality under a (k+1)-point rule") {
  const int k = 4;
  const auto r = gauss_legendre_rule(k + 1);
  const auto table = legendre_table(k, r.nodes);
  for (int m = 0; m <= k; ++m) {
    for (int n = 0; n <= k; ++n) {
      double ip = 0.0;
      for (int q = 0; q <= k; ++q) ip += r.weights[q] * table.val(q, m) * table.val(q, n);
      const double expected = (m == n) ? 2.0 / (2.0 * n + 1.0) : 0.0;
      CHECK(std::abs(ip - expected) <= 1e-13);
    }
  }
}

TEST_CASE("derivatives match central differences") {
  const double delta = 1e-6;
  std::vector<double> xs = {-0.9, -0.3, 0.0, 0.4, 0.8};
  for (int k = 1; k <= 4; ++k) {
    for (double x : xs) {
      std::vector<double> v(k + 1), d(k + 1), vp(k + 1), vm(k + 1), tmp(k + 1);
      legendre_eval(k, x, v, d);
      legendre_eval(k, x + delta, vp, tmp);
      legendre_eval(k, x - delta, vm, tmp);
      for (int m = 0; m <= k; ++m) {
        const double fd = (vp[m] - vm[m]) / (2.0 * delta);
        CHECK(std::abs(d[m] - fd) <= 1e-8);
      }
    }
  }
}

TEST_CASE("affine map") {
  CHECK(affine_map(0.0, 1.0, -1.0) == 0.0);
  CHECK(affine_map(0.0, 1.0, 1.0) == 1.0);
  CHECK(affine_map(2.0, 6.0, 0.0) == doctest::Approx(4.0));
  CHECK(affine_jacobian(2.0, 6.0) == doctest::Approx(2.0));
}
