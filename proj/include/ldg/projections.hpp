#pragma once

#include <utility>
#include <vector>

#include "ldg/dg_field.hpp"
#include "ldg/mesh.hpp"
#include "ldg/problems.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

// The five local Gauss-Radau projections. Each fixes (k+1)^2 moment
// conditions per element; traces are taken from within the element
// (pi_x_minus matches at the right face, pi_x_plus at the left face).
enum class ProjectionKind { pi_minus, pi_x_minus, pi_y_minus, pi_x_plus, pi_y_plus };

// Local coefficient block for element (i,j) (0-based), laid out as
// coeff[n*(k+1)+m] for basis P_m(xhat)P_n(yhat).
std::vector<double> project_element(const ScalarFn& z, const Mesh2D& mesh, int i, int j, ProjectionKind kind,
                                    int k, const QuadratureRule& quad);

// One projection kind applied on every element.
DGField project_all(const ScalarFn& z, const Mesh2D& mesh, ProjectionKind kind, int k,
                    const QuadratureRule& quad);

// Composite interpolant of u: pi_x_minus on the column of elements whose
// right face is the transition line x_{N/2} (rows j != N/2), pi_y_minus on
// the symmetric row, pi_minus elsewhere (including the crossing element).
DGField interpolate_P_minus(const ScalarFn& u, const Mesh2D& mesh, int k, const QuadratureRule& quad);

// Flux interpolants: pi_x_plus for p and pi_y_plus for q, on all elements.
std::pair<DGField, DGField> interpolate_flux(const ScalarFn& p, const ScalarFn& q, const Mesh2D& mesh, int k,
                                             const QuadratureRule& quad);

// Re-evaluates the defining moment conditions of `kind` for the stored block
// of element (i,j) against z with the given (finer) quadrature; returns the
// max residual relative to the local scale of z.
double moment_residual(const DGField& field, const ScalarFn& z, const Mesh2D& mesh, int i, int j,
                       ProjectionKind kind, const QuadratureRule& quad);

}  // namespace ldg
