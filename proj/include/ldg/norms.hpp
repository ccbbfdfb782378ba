#pragma once

#include "ldg/assembly.hpp"
#include "ldg/dg_field.hpp"
#include "ldg/mesh.hpp"
#include "ldg/problems.hpp"
#include "ldg/quadrature.hpp"

#include <cmath>

namespace ldg {

// Squared components of the energy norm; total_2 drops the jump terms.
struct ErrorBreakdown {
  double u_weighted_l2_sq = 0.0;  // ||(b - div(alpha)/2)^(1/2) u||^2
  double p_scaled_l2_sq = 0.0;    // eps^-1 ||p||^2
  double q_scaled_l2_sq = 0.0;
  double jump_x_sq = 0.0;  // weighted vertical-edge jump sum
  double jump_y_sq = 0.0;

  double total_2() const { return std::sqrt(u_weighted_l2_sq + p_scaled_l2_sq + q_scaled_l2_sq); }
  double total_E() const {
    return std::sqrt(u_weighted_l2_sq + p_scaled_l2_sq + q_scaled_l2_sq + jump_x_sq + jump_y_sq);
  }
};

ErrorBreakdown energy_norm(const DGSolution& w, const ProblemSpec& problem, const Mesh2D& mesh,
                           const FluxParams& flux, const QuadratureRule& quad);

// ||| pi w - W |||_E with pi w = (P^- u, pi_x^+ p, pi_y^+ q) built from the
// exact solution; both sides live in the discrete space, so the difference
// is formed coefficientwise.
ErrorBreakdown supercloseness_error(const DGSolution& W, const ProblemSpec& problem, const Mesh2D& mesh,
                                    int k, const FluxParams& flux, const QuadratureRule& quad);

struct TrueError {
  ErrorBreakdown breakdown;  // |||w - W|||_2 components (jumps zero)
  double linf_eta_u = 0.0;   // sampled sup-norm of u - P^- u
};

TrueError true_error(const DGSolution& W, const ProblemSpec& problem, const Mesh2D& mesh,
                     const QuadratureRule& quad_err);

// Interpolation-only error quantities (no solve involved).
struct InterpolationReport {
  double linf_eta_u = 0.0;
  double eta_u_l2 = 0.0;
  double eta_p_scaled = 0.0;  // eps^-1/2 ||p - pi_x^+ p||
  double eta_q_scaled = 0.0;
  double edge_sq_x = 0.0;  // max_i sum_j ||(eta_u)^-_{i,y}||^2_{J_j}
  double edge_sq_y = 0.0;
};

InterpolationReport interpolation_error(const ProblemSpec& problem, const Mesh2D& mesh, int k,
                                        const QuadratureRule& quad);

}  // namespace ldg
