#pragma once

#include <vector>

#include "ldg/quadrature.hpp"

namespace ldg {

// Element-local tensor-product Legendre coefficients for one scalar unknown.
// Element indices are 0-based internally; element (i,j) here is K_{i+1,j+1}
// in 1-based edge numbering. Coefficient (m,n) multiplies P_m(xhat)P_n(yhat).
struct DGField {
  int degree = 0;  // k
  int n = 0;       // N, elements per direction
  std::vector<double> coeff;

  DGField() = default;
  DGField(int k, int n_elems) : degree(k), n(n_elems), coeff(static_cast<size_t>(n_elems) * n_elems * (k + 1) * (k + 1), 0.0) {}

  int block_size() const { return (degree + 1) * (degree + 1); }
  size_t index(int i, int j, int m, int nn) const {
    return (static_cast<size_t>(j) * n + i) * block_size() + static_cast<size_t>(nn) * (degree + 1) + m;
  }
  double& at(int i, int j, int m, int nn) { return coeff[index(i, j, m, nn)]; }
  double at(int i, int j, int m, int nn) const { return coeff[index(i, j, m, nn)]; }

  // Value at reference point (xhat, yhat) in [-1,1]^2 of element (i,j).
  double eval_ref(int i, int j, double xhat, double yhat) const;
};

// Trace on a vertical element face as Legendre coefficients in yhat.
// right=true gives the trace at the element's right face x_{i+1}.
std::vector<double> trace_x(const DGField& f, int i, int j, bool right);
// Trace on a horizontal face as coefficients in xhat; top=true is y_{j+1}.
std::vector<double> trace_y(const DGField& f, int i, int j, bool top);

// Jump polynomial on vertical edge e = 0..N (1-based edge numbering) for
// element row j, in yhat coefficients. Interior: v+ - v-; boundary edges
// follow the one-sided conventions [[v]]_0 = v+, [[v]]_N = -v-.
std::vector<double> jump_x(const DGField& f, int edge, int j);
std::vector<double> jump_y(const DGField& f, int i, int edge);

// The three LDG unknowns.
struct DGSolution {
  DGField u, p, q;
  DGSolution() = default;
  DGSolution(int k, int n) : u(k, n), p(k, n), q(k, n) {}
  int degree() const { return u.degree; }
  int n() const { return u.n; }
};

}  // namespace ldg
