#include "ldg/norms.hpp"

#include "ldg/projections.hpp"

#include <stdexcept>

namespace ldg {

namespace {

double field_eval(const DGField& f, const BasisTable& basis, int i, int j, int qx, int qy) {
  const int k = f.degree;
  double v = 0.0;
  for (int nn = 0; nn <= k; ++nn)
    for (int m = 0; m <= k; ++m) v += f.at(i, j, m, nn) * basis.val(qx, m) * basis.val(qy, nn);
  return v;
}

double edge_poly_eval(const std::vector<double>& c, const BasisTable& basis, int q) {
  double v = 0.0;
  for (size_t m = 0; m < c.size(); ++m) v += c[m] * basis.val(q, static_cast<int>(m));
  return v;
}

}  // namespace

ErrorBreakdown energy_norm(const DGSolution& w, const ProblemSpec& problem, const Mesh2D& mesh,
                           const FluxParams& flux, const QuadratureRule& quad) {
  const int k = w.degree();
  const int n = w.n();
  const int nq = quad.size();
  const double inv_eps = 1.0 / problem.epsilon;
  const BasisTable basis = legendre_table(k, quad.nodes);
  ErrorBreakdown out;

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jac = affine_jacobian(x0, x1) * affine_jacobian(y0, y1);
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad.nodes[qx]);
          const double wq = quad.weights[qx] * quad.weights[qy] * jac;
          const double uv = field_eval(w.u, basis, i, j, qx, qy);
          const double pv = field_eval(w.p, basis, i, j, qx, qy);
          const double qv = field_eval(w.q, basis, i, j, qx, qy);
          out.u_weighted_l2_sq += wq * (problem.b(x, y) - 0.5 * problem.div_alpha(x, y)) * uv * uv;
          out.p_scaled_l2_sq += wq * inv_eps * pv * pv;
          out.q_scaled_l2_sq += wq * inv_eps * qv * qv;
        }
      }
    }
  }

  // Vertical edges: weight a1/2 for e = 0..N-1, a1/2 + lambda1 at e = N.
  for (int e = 0; e <= n; ++e) {
    const double xe = mesh.x.points[e];
    for (int j = 0; j < n; ++j) {
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jy = affine_jacobian(y0, y1);
      const auto jmp = jump_x(w.u, e, j);
      for (int q = 0; q < nq; ++q) {
        const double y = affine_map(y0, y1, quad.nodes[q]);
        const double weight = 0.5 * problem.a1(xe, y) + (e == n ? flux.lambda1 : 0.0);
        const double jv = edge_poly_eval(jmp, basis, q);
        out.jump_x_sq += quad.weights[q] * jy * weight * jv * jv;
      }
    }
  }
  for (int e = 0; e <= n; ++e) {
    const double ye = mesh.y.points[e];
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double jx = affine_jacobian(x0, x1);
      const auto jmp = jump_y(w.u, i, e);
      for (int q = 0; q < nq; ++q) {
        const double x = affine_map(x0, x1, quad.nodes[q]);
        const double weight = 0.5 * problem.a2(x, ye) + (e == n ? flux.lambda2 : 0.0);
        const double jv = edge_poly_eval(jmp, basis, q);
        out.jump_y_sq += quad.weights[q] * jx * weight * jv * jv;
      }
    }
  }
  return out;
}

ErrorBreakdown supercloseness_error(const DGSolution& W, const ProblemSpec& problem, const Mesh2D& mesh,
                                    int k, const FluxParams& flux, const QuadratureRule& quad) {
  if (!problem.has_exact) throw std::invalid_argument("supercloseness_error: problem has no exact solution");
  const double eps = problem.epsilon;
  const ScalarFn p_exact = [&problem, eps](double x, double y) { return eps * problem.u_x(x, y); };
  const ScalarFn q_exact = [&problem, eps](double x, double y) { return eps * problem.u_y(x, y); };

  DGSolution xi(k, W.n());
  xi.u = interpolate_P_minus(problem.u, mesh, k, quad);
  auto [pi_p, pi_q] = interpolate_flux(p_exact, q_exact, mesh, k, quad);
  xi.p = std::move(pi_p);
  xi.q = std::move(pi_q);
  for (size_t c = 0; c < xi.u.coeff.size(); ++c) {
    xi.u.coeff[c] = W.u.coeff[c] - xi.u.coeff[c];
    xi.p.coeff[c] = W.p.coeff[c] - xi.p.coeff[c];
    xi.q.coeff[c] = W.q.coeff[c] - xi.q.coeff[c];
  }
  return energy_norm(xi, problem, mesh, flux, quad);
}

TrueError true_error(const DGSolution& W, const ProblemSpec& problem, const Mesh2D& mesh,
                     const QuadratureRule& quad_err) {
  if (!problem.has_exact) throw std::invalid_argument("true_error: problem has no exact solution");
  const int k = W.degree();
  const int n = W.n();
  const int nq = quad_err.size();
  const double eps = problem.epsilon;
  const BasisTable basis = legendre_table(k, quad_err.nodes);

  const DGField interp_u = interpolate_P_minus(problem.u, mesh, k, quad_err);

  TrueError out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jac = affine_jacobian(x0, x1) * affine_jacobian(y0, y1);
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad_err.nodes[qy]);
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad_err.nodes[qx]);
          const double wq = quad_err.weights[qx] * quad_err.weights[qy] * jac;
          const double du = problem.u(x, y) - field_eval(W.u, basis, i, j, qx, qy);
          const double dp = eps * problem.u_x(x, y) - field_eval(W.p, basis, i, j, qx, qy);
          const double dq = eps * problem.u_y(x, y) - field_eval(W.q, basis, i, j, qx, qy);
          out.breakdown.u_weighted_l2_sq += wq * (problem.b(x, y) - 0.5 * problem.div_alpha(x, y)) * du * du;
          out.breakdown.p_scaled_l2_sq += wq * dp * dp / eps;
          out.breakdown.q_scaled_l2_sq += wq * dq * dq / eps;
          const double eta = problem.u(x, y) - field_eval(interp_u, basis, i, j, qx, qy);
          out.linf_eta_u = std::max(out.linf_eta_u, std::abs(eta));
        }
      }
      // Element corners (exact polynomial evaluation of the interpolant).
      for (int cy = 0; cy < 2; ++cy)
        for (int cx = 0; cx < 2; ++cx) {
          const double x = cx ? x1 : x0, y = cy ? y1 : y0;
          const double eta = problem.u(x, y) - interp_u.eval_ref(i, j, cx ? 1.0 : -1.0, cy ? 1.0 : -1.0);
          out.linf_eta_u = std::max(out.linf_eta_u, std::abs(eta));
        }
    }
  }
  return out;
}

InterpolationReport interpolation_error(const ProblemSpec& problem, const Mesh2D& mesh, int k,
                                        const QuadratureRule& quad) {
  if (!problem.has_exact) throw std::invalid_argument("interpolation_error: problem has no exact solution");
  const int n = mesh.n();
  const int nq = quad.size();
  const double eps = problem.epsilon;
  const BasisTable basis = legendre_table(k, quad.nodes);

  const ScalarFn p_exact = [&problem, eps](double x, double y) { return eps * problem.u_x(x, y); };
  const ScalarFn q_exact = [&problem, eps](double x, double y) { return eps * problem.u_y(x, y); };
  const DGField interp_u = interpolate_P_minus(problem.u, mesh, k, quad);
  const auto [interp_p, interp_q] = interpolate_flux(p_exact, q_exact, mesh, k, quad);

  InterpolationReport out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jac = affine_jacobian(x0, x1) * affine_jacobian(y0, y1);
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad.nodes[qx]);
          const double wq = quad.weights[qx] * quad.weights[qy] * jac;
          const double eu = problem.u(x, y) - field_eval(interp_u, basis, i, j, qx, qy);
          const double ep = eps * problem.u_x(x, y) - field_eval(interp_p, basis, i, j, qx, qy);
          const double eq = eps * problem.u_y(x, y) - field_eval(interp_q, basis, i, j, qx, qy);
          out.linf_eta_u = std::max(out.linf_eta_u, std::abs(eu));
          out.eta_u_l2 += wq * eu * eu;
          out.eta_p_scaled += wq * ep * ep / eps;
          out.eta_q_scaled += wq * eq * eq / eps;
        }
      }
    }
  }
  out.eta_u_l2 = std::sqrt(out.eta_u_l2);
  out.eta_p_scaled = std::sqrt(out.eta_p_scaled);
  out.eta_q_scaled = std::sqrt(out.eta_q_scaled);

  // Edge-trace sums of eta_u, traces taken from the left/below element.
  for (int e = 1; e <= n; ++e) {
    const double xe = mesh.x.points[e];
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jy = affine_jacobian(y0, y1);
      const auto tr = trace_x(interp_u, e - 1, j, true);
      for (int q = 0; q < nq; ++q) {
        const double y = affine_map(y0, y1, quad.nodes[q]);
        const double eta = problem.u(xe, y) - edge_poly_eval(tr, basis, q);
        sum += quad.weights[q] * jy * eta * eta;
      }
    }
    out.edge_sq_x = std::max(out.edge_sq_x, sum);
  }
  for (int e = 1; e <= n; ++e) {
    const double ye = mesh.y.points[e];
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double jx = affine_jacobian(x0, x1);
      const auto tr = trace_y(interp_u, i, e - 1, true);
      for (int q = 0; q < nq; ++q) {
        const double x = affine_map(x0, x1, quad.nodes[q]);
        const double eta = problem.u(x, ye) - edge_poly_eval(tr, basis, q);
        sum += quad.weights[q] * jx * eta * eta;
      }
    }
    out.edge_sq_y = std::max(out.edge_sq_y, sum);
  }
  return out;
}

}  // namespace ldg
