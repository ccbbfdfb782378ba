#pragma once

#include <span>
#include <vector>

namespace ldg {

// Gauss-Legendre rule on [-1,1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

// n-point rule, exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre_rule(int n);

// Values and first derivatives of P_0..P_k at x via the three-term recurrence.
void legendre_eval(int k, double x, std::span<double> values, std::span<double> derivs);

// Tabulated Legendre values/derivatives at a fixed node set, plus endpoint traces.
struct BasisTable {
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> value;  // [q*(k+1)+m]
  std::vector<double> deriv;  // [q*(k+1)+m]
  std::vector<double> at_left;   // P_m(-1) = (-1)^m
  std::vector<double> at_right;  // P_m(+1) = 1

  double val(int q, int m) const { return value[q * (degree + 1) + m]; }
  double der(int q, int m) const { return deriv[q * (degree + 1) + m]; }
};

BasisTable legendre_table(int k, std::span<const double> nodes);

// Affine map [a,b] <-> reference [-1,1].
inline double affine_map(double a, double b, double r) { return a + 0.5 * (b - a) * (r + 1.0); }
inline double affine_jacobian(double a, double b) { return 0.5 * (b - a); }

}  // namespace ldg
