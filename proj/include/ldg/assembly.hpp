#pragma once

#include <Eigen/Sparse>

#include <iosfwd>

#include "ldg/dg_field.hpp"
#include "ldg/mesh.hpp"
#include "ldg/problems.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

// Penalty parameters of the boundary numerical fluxes: lambda1 acts on the
// x-direction outflow face x = 1, lambda2 on y = 1.
struct FluxParams {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

void validate(const FluxParams& flux);

struct LinearSystem {
  Eigen::SparseMatrix<double> A;
  Eigen::VectorXd rhs;
  int degree = 0;
  int n = 0;
};

inline long n_dofs(int k, int n) { return 3L * n * n * (k + 1) * (k + 1); }

// Dof layout: field block (0=U, 1=P, 2=Q), then elements lexicographic with
// i fastest, then (n,m) within the element.
inline long dof_index(int k, int n, int field, int i, int j, int m, int nn) {
  const long bs = (k + 1L) * (k + 1);
  return (static_cast<long>(field) * n * n + static_cast<long>(j) * n + i) * bs + nn * (k + 1L) + m;
}

// Assemble the discrete system B(W;Z) = (f,v) over all basis test triples.
LinearSystem assemble(const ProblemSpec& problem, const Mesh2D& mesh, int k, const FluxParams& flux,
                      const QuadratureRule& quad);

// The bilinear form evaluated term-by-term (independent of the matrix path).
double apply_B(const DGSolution& W, const DGSolution& Z, const ProblemSpec& problem, const Mesh2D& mesh,
               const FluxParams& flux, const QuadratureRule& quad);

Eigen::VectorXd to_vector(const DGSolution& w);
DGSolution from_vector(const Eigen::VectorXd& v, int k, int n);

// Coordinate text dump: "row col value" per stored entry.
void write_matrix_coordinate(const LinearSystem& sys, std::ostream& out);

}  // namespace ldg
