#include "ldg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldg {

namespace {

// P_n(x) and P_n'(x) for a single degree.
void legendre_pair(int n, double x, double& p, double& dp) {
  double pm1 = 1.0, pm1d = 0.0;  // P_0
  if (n == 0) {
    p = pm1;
    dp = pm1d;
    return;
  }
  double pn = x, pnd = 1.0;  // P_1
  for (int m = 1; m < n; ++m) {
    const double pp = ((2.0 * m + 1.0) * x * pn - m * pm1) / (m + 1.0);
    const double ppd = pm1d + (2.0 * m + 1.0) * pn;
    pm1 = pn;
    pm1d = pnd;
    pn = pp;
    pnd = ppd;
  }
  p = pn;
  dp = pnd;
}

}  // namespace

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, p, dp);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // Symmetrize so pairs are exact mirrors and the middle node of odd rules is 0.
  for (int i = 0; i < n / 2; ++i) {
    const double xm = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double wm = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    rule.nodes[i] = -xm;
    rule.nodes[n - 1 - i] = xm;
    rule.weights[i] = rule.weights[n - 1 - i] = wm;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void legendre_eval(int k, double x, std::span<double> values, std::span<double> derivs) {
  values[0] = 1.0;
  derivs[0] = 0.0;
  if (k == 0) return;
  values[1] = x;
  derivs[1] = 1.0;
  for (int m = 1; m < k; ++m) {
    values[m + 1] = ((2.0 * m + 1.0) * x * values[m] - m * values[m - 1]) / (m + 1.0);
    derivs[m + 1] = derivs[m - 1] + (2.0 * m + 1.0) * values[m];
  }
}

BasisTable legendre_table(int k, std::span<const double> nodes) {
  if (k < 0) throw std::invalid_argument("legendre_table: k must be >= 0");
  BasisTable table;
  table.degree = k;
  table.nodes.assign(nodes.begin(), nodes.end());
  const int nq = static_cast<int>(nodes.size());
  table.value.resize(nq * (k + 1));
  table.deriv.resize(nq * (k + 1));
  for (int q = 0; q < nq; ++q) {
    legendre_eval(k, nodes[q], std::span(table.value).subspan(q * (k + 1), k + 1),
                  std::span(table.deriv).subspan(q * (k + 1), k + 1));
  }
  table.at_left.resize(k + 1);
  table.at_right.resize(k + 1);
  for (int m = 0; m <= k; ++m) {
    table.at_left[m] = (m % 2 == 0) ? 1.0 : -1.0;
    table.at_right[m] = 1.0;
  }
  return table;
}

}  // namespace ldg
