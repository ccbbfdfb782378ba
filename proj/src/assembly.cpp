#include "ldg/assembly.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace ldg {

namespace {

void validate_inputs(const ProblemSpec& problem, const Mesh2D& mesh, int k, const FluxParams& flux,
                     const QuadratureRule& quad) {
  validate(flux);
  if (k < 1) throw std::invalid_argument("assemble: k must be >= 1");
  if (quad.size() < k + 3) throw std::invalid_argument("assemble: quadrature must use at least k+3 points");
  for (const auto* m : {&mesh.x, &mesh.y}) {
    if (m->config.rho < k + 2) {
      throw std::invalid_argument("assemble: rho >= k+2 violated (rho=" + std::to_string(m->config.rho) +
                                  ", k=" + std::to_string(k) + ")");
    }
  }
  if (!(problem.epsilon > 0.0)) throw std::invalid_argument("assemble: epsilon must be positive");
}

// 1D edge mass \int_{J} c(edge,y) P_tn(yhat) P_n(yhat), tn rows.
using EdgeMass = std::vector<double>;  // [tn*(k+1)+n]

EdgeMass edge_mass(int k, double jac, const QuadratureRule& quad, const BasisTable& basis,
                   const std::function<double(double)>& coeff, double lo, double hi) {
  EdgeMass mass((k + 1) * (k + 1), 0.0);
  for (int q = 0; q < quad.size(); ++q) {
    const double w = quad.weights[q] * jac * coeff(affine_map(lo, hi, quad.nodes[q]));
    for (int tn = 0; tn <= k; ++tn)
      for (int n = 0; n <= k; ++n) mass[tn * (k + 1) + n] += w * basis.val(q, tn) * basis.val(q, n);
  }
  return mass;
}

double sgn_left(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void validate(const FluxParams& flux) {
  if (!(flux.lambda1 >= 0.0 && flux.lambda1 <= 1e3) || !(flux.lambda2 >= 0.0 && flux.lambda2 <= 1e3))
    throw std::invalid_argument("FluxParams: lambda1, lambda2 must lie in [0, 1e3]");
}

LinearSystem assemble(const ProblemSpec& problem, const Mesh2D& mesh, int k, const FluxParams& flux,
                      const QuadratureRule& quad) {
  validate_inputs(problem, mesh, k, flux, quad);
  const int n = mesh.n();
  const int kp = k + 1;
  const int bs = kp * kp;
  const int nq = quad.size();
  const double inv_eps = 1.0 / problem.epsilon;
  const BasisTable basis = legendre_table(k, quad.nodes);

  LinearSystem sys;
  sys.degree = k;
  sys.n = n;
  const long dofs = n_dofs(k, n);
  sys.rhs = Eigen::VectorXd::Zero(dofs);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(n) * n * bs * bs * 10);

  const auto dof = [&](int field, int i, int j, int m, int nn) { return dof_index(k, n, field, i, j, m, nn); };

  // Volume terms.
  std::vector<double> m_bv(bs * bs), mass(bs * bs), dx(bs * bs), dy(bs * bs), a1x(bs * bs), a2y(bs * bs);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jx = affine_jacobian(x0, x1), jy = affine_jacobian(y0, y1);
      const double ddx = 1.0 / jx, ddy = 1.0 / jy;  // reference-to-physical derivative factors

      std::fill(m_bv.begin(), m_bv.end(), 0.0);
      std::fill(mass.begin(), mass.end(), 0.0);
      std::fill(dx.begin(), dx.end(), 0.0);
      std::fill(dy.begin(), dy.end(), 0.0);
      std::fill(a1x.begin(), a1x.end(), 0.0);
      std::fill(a2y.begin(), a2y.end(), 0.0);

      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad.nodes[qx]);
          const double w = quad.weights[qx] * quad.weights[qy] * jx * jy;
          const double cbv = w * (problem.b(x, y) - problem.div_alpha(x, y));
          const double ca1 = w * problem.a1(x, y);
          const double ca2 = w * problem.a2(x, y);
          for (int tn = 0; tn <= k; ++tn) {
            for (int tm = 0; tm <= k; ++tm) {
              const int t = tn * kp + tm;
              const double tv = basis.val(qx, tm) * basis.val(qy, tn);
              const double tdx = basis.der(qx, tm) * ddx * basis.val(qy, tn);
              const double tdy = basis.val(qx, tm) * basis.der(qy, tn) * ddy;
              for (int cn = 0; cn <= k; ++cn) {
                for (int cm = 0; cm <= k; ++cm) {
                  const int c = cn * kp + cm;
                  const double cv = basis.val(qx, cm) * basis.val(qy, cn);
                  m_bv[t * bs + c] += cbv * cv * tv;
                  mass[t * bs + c] += w * cv * tv;
                  dx[t * bs + c] += w * cv * tdx;
                  dy[t * bs + c] += w * cv * tdy;
                  a1x[t * bs + c] += ca1 * cv * tdx;
                  a2y[t * bs + c] += ca2 * cv * tdy;
                }
              }
            }
          }
          // Right-hand side (f, v).
          const double fw = w * problem.f(x, y);
          for (int tn = 0; tn <= k; ++tn)
            for (int tm = 0; tm <= k; ++tm)
              sys.rhs[dof(0, i, j, tm, tn)] += fw * basis.val(qx, tm) * basis.val(qy, tn);
        }
      }

      for (int t = 0; t < bs; ++t) {
        const int tm = t % kp, tn = t / kp;
        for (int c = 0; c < bs; ++c) {
          const int cm = c % kp, cn = c / kp;
          const long rv = dof(0, i, j, tm, tn), rs = dof(1, i, j, tm, tn), rr = dof(2, i, j, tm, tn);
          const long cu = dof(0, i, j, cm, cn), cp = dof(1, i, j, cm, cn), cq = dof(2, i, j, cm, cn);
          trip.emplace_back(rv, cu, m_bv[t * bs + c] - a1x[t * bs + c] - a2y[t * bs + c]);  // B1 + B4 volume
          trip.emplace_back(rs, cp, inv_eps * mass[t * bs + c]);                            // B1
          trip.emplace_back(rr, cq, inv_eps * mass[t * bs + c]);                            // B1
          trip.emplace_back(rs, cu, dx[t * bs + c]);                                       // B2 volume
          trip.emplace_back(rr, cu, dy[t * bs + c]);                                       // B2 volume
          trip.emplace_back(rv, cp, dx[t * bs + c]);                                       // B3 volume
          trip.emplace_back(rv, cq, dy[t * bs + c]);                                       // B3 volume
        }
      }
    }
  }

  // Vertical edges e = 0..N (1-based point numbering); traces in yhat.
  for (int e = 0; e <= n; ++e) {
    const double xe = mesh.x.points[e];
    const int el = e - 1;  // element left of the edge (0-based), valid for e >= 1
    const int er = e;      // element right of the edge, valid for e <= n-1
    for (int j = 0; j < n; ++j) {
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jy = affine_jacobian(y0, y1);
      const EdgeMass em = edge_mass(k, jy, quad, basis, [](double) { return 1.0; }, y0, y1);
      const EdgeMass ea1 = edge_mass(k, jy, quad, basis, [&](double y) { return problem.a1(xe, y); }, y0, y1);

      const auto add = [&](int tfield, int telem, double tsgn_m, int cfield, int celem, double csgn_m,
                           const EdgeMass& mass_tab, double scale) {
        // tsgn_m/csgn_m: +1 for a right-face trace, -1 selects (-1)^m for a left-face trace.
        for (int tn = 0; tn <= k; ++tn)
          for (int tm = 0; tm <= k; ++tm)
            for (int cn = 0; cn <= k; ++cn)
              for (int cm = 0; cm <= k; ++cm) {
                const double v = scale * (tsgn_m > 0 ? 1.0 : sgn_left(tm)) * (csgn_m > 0 ? 1.0 : sgn_left(cm)) *
                                 mass_tab[tn * kp + cn];
                trip.emplace_back(dof(tfield, telem, j, tm, tn), dof(cfield, celem, j, cm, cn), v);
              }
      };

      if (e >= 1 && e <= n - 1) {
        // B2: + <U^-, [[s]]> = <U^-, s^+> - <U^-, s^->
        add(1, er, -1.0, 0, el, +1.0, em, +1.0);
        add(1, el, +1.0, 0, el, +1.0, em, -1.0);
      }
      if (e <= n - 1) {
        // B3: + <P^+, [[v]]>; at e=0 the jump is v^+ alone.
        add(0, er, -1.0, 1, er, -1.0, em, +1.0);
        if (e >= 1) add(0, el, +1.0, 1, er, -1.0, em, -1.0);
      } else {
        // B3 boundary: - <P^-_N, v^-_N>
        add(0, el, +1.0, 1, el, +1.0, em, -1.0);
      }
      if (e >= 1 && e <= n - 1) {
        // B4: - <a1 U^-, [[v]]>
        add(0, er, -1.0, 0, el, +1.0, ea1, -1.0);
        add(0, el, +1.0, 0, el, +1.0, ea1, +1.0);
      } else if (e == n) {
        // B4 boundary: [[v]]_N = -v^- flips the sign, plus the lambda1 penalty.
        add(0, el, +1.0, 0, el, +1.0, ea1, +1.0);
        add(0, el, +1.0, 0, el, +1.0, em, +flux.lambda1);
      }
    }
  }

  // Horizontal edges; traces in xhat.
  for (int e = 0; e <= n; ++e) {
    const double ye = mesh.y.points[e];
    const int eb = e - 1;  // element below
    const int et = e;      // element above
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double jx = affine_jacobian(x0, x1);
      const EdgeMass em = edge_mass(k, jx, quad, basis, [](double) { return 1.0; }, x0, x1);
      const EdgeMass ea2 = edge_mass(k, jx, quad, basis, [&](double x) { return problem.a2(x, ye); }, x0, x1);

      const auto add = [&](int tfield, int telem, double tsgn_n, int cfield, int celem, double csgn_n,
                           const EdgeMass& mass_tab, double scale) {
        for (int tn = 0; tn <= k; ++tn)
          for (int tm = 0; tm <= k; ++tm)
            for (int cn = 0; cn <= k; ++cn)
              for (int cm = 0; cm <= k; ++cm) {
                const double v = scale * (tsgn_n > 0 ? 1.0 : sgn_left(tn)) * (csgn_n > 0 ? 1.0 : sgn_left(cn)) *
                                 mass_tab[tm * kp + cm];
                trip.emplace_back(dof(tfield, i, telem, tm, tn), dof(cfield, i, celem, cm, cn), v);
              }
      };

      if (e >= 1 && e <= n - 1) {
        add(2, et, -1.0, 0, eb, +1.0, em, +1.0);  // B2: <U^-, [[r]]>
        add(2, eb, +1.0, 0, eb, +1.0, em, -1.0);
      }
      if (e <= n - 1) {
        add(0, et, -1.0, 2, et, -1.0, em, +1.0);  // B3: <Q^+, [[v]]>
        if (e >= 1) add(0, eb, +1.0, 2, et, -1.0, em, -1.0);
      } else {
        add(0, eb, +1.0, 2, eb, +1.0, em, -1.0);  // - <Q^-_N, v^->
      }
      if (e >= 1 && e <= n - 1) {
        add(0, et, -1.0, 0, eb, +1.0, ea2, -1.0);  // B4
        add(0, eb, +1.0, 0, eb, +1.0, ea2, +1.0);
      } else if (e == n) {
        add(0, eb, +1.0, 0, eb, +1.0, ea2, +1.0);
        add(0, eb, +1.0, 0, eb, +1.0, em, +flux.lambda2);
      }
    }
  }

  sys.A.resize(dofs, dofs);
  sys.A.setFromTriplets(trip.begin(), trip.end());
  sys.A.makeCompressed();
  return sys;
}

namespace {

double edge_poly_eval(const std::vector<double>& c, const BasisTable& basis, int q) {
  double v = 0.0;
  for (size_t m = 0; m < c.size(); ++m) v += c[m] * basis.val(q, static_cast<int>(m));
  return v;
}

}  // namespace

double apply_B(const DGSolution& W, const DGSolution& Z, const ProblemSpec& problem, const Mesh2D& mesh,
               const FluxParams& flux, const QuadratureRule& quad) {
  if (W.degree() != Z.degree() || W.n() != Z.n())
    throw std::invalid_argument("apply_B: mismatched discretizations");
  const int k = W.degree();
  const int n = W.n();
  const int nq = quad.size();
  const double inv_eps = 1.0 / problem.epsilon;
  const BasisTable basis = legendre_table(k, quad.nodes);

  double total = 0.0;

  // Volume terms of B1..B4.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
      const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
      const double jx = affine_jacobian(x0, x1), jy = affine_jacobian(y0, y1);
      const double ddx = 1.0 / jx, ddy = 1.0 / jy;
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad.nodes[qx]);
          const double w = quad.weights[qx] * quad.weights[qy] * jx * jy;
          double u = 0, p = 0, qv = 0, v = 0, s = 0, r = 0, vx = 0, vy = 0, sx = 0, ry = 0;
          for (int nn = 0; nn <= k; ++nn) {
            for (int m = 0; m <= k; ++m) {
              const double bxy = basis.val(qx, m) * basis.val(qy, nn);
              const double bdx = basis.der(qx, m) * ddx * basis.val(qy, nn);
              const double bdy = basis.val(qx, m) * basis.der(qy, nn) * ddy;
              u += W.u.at(i, j, m, nn) * bxy;
              p += W.p.at(i, j, m, nn) * bxy;
              qv += W.q.at(i, j, m, nn) * bxy;
              v += Z.u.at(i, j, m, nn) * bxy;
              s += Z.p.at(i, j, m, nn) * bxy;
              r += Z.q.at(i, j, m, nn) * bxy;
              vx += Z.u.at(i, j, m, nn) * bdx;
              vy += Z.u.at(i, j, m, nn) * bdy;
              sx += Z.p.at(i, j, m, nn) * bdx;
              ry += Z.q.at(i, j, m, nn) * bdy;
            }
          }
          total += w * ((problem.b(x, y) - problem.div_alpha(x, y)) * u * v + inv_eps * (p * s + qv * r));  // B1
          total += w * (u * sx + u * ry);                                                                   // B2
          total += w * (p * vx + qv * vy);                                                                  // B3
          total -= w * (problem.a1(x, y) * u * vx + problem.a2(x, y) * u * vy);                             // B4
        }
      }
    }
  }

  // Vertical edge sums.
  for (int j = 0; j < n; ++j) {
    const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
    const double jy = affine_jacobian(y0, y1);
    for (int e = 0; e <= n; ++e) {
      const double xe = mesh.x.points[e];
      std::vector<double> u_minus, s_jump, p_plus, v_jump, v_minus;
      if (e >= 1) u_minus = trace_x(W.u, e - 1, j, true);
      if (e >= 1 && e <= n - 1) s_jump = jump_x(Z.p, e, j);
      if (e <= n - 1) p_plus = trace_x(W.p, e, j, false);
      v_jump = jump_x(Z.u, e, j);
      if (e == n) v_minus = trace_x(Z.u, n - 1, j, true);
      for (int q = 0; q < nq; ++q) {
        const double w = quad.weights[q] * jy;
        const double y = affine_map(y0, y1, quad.nodes[q]);
        if (e >= 1 && e <= n - 1)
          total += w * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(s_jump, basis, q);  // B2
        if (e <= n - 1)
          total += w * edge_poly_eval(p_plus, basis, q) * edge_poly_eval(v_jump, basis, q);  // B3
        if (e == n) {
          const auto p_minus = trace_x(W.p, n - 1, j, true);
          total -= w * edge_poly_eval(p_minus, basis, q) * edge_poly_eval(v_minus, basis, q);  // B3 boundary
        }
        if (e >= 1) {
          total -= w * problem.a1(xe, y) * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(v_jump, basis, q);  // B4
          if (e == n)
            total += w * flux.lambda1 * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(v_minus, basis, q);
        }
      }
    }
  }

  // Horizontal edge sums.
  for (int i = 0; i < n; ++i) {
    const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
    const double jx = affine_jacobian(x0, x1);
    for (int e = 0; e <= n; ++e) {
      const double ye = mesh.y.points[e];
      std::vector<double> u_minus, r_jump, q_plus, v_jump, v_minus;
      if (e >= 1) u_minus = trace_y(W.u, i, e - 1, true);
      if (e >= 1 && e <= n - 1) r_jump = jump_y(Z.q, i, e);
      if (e <= n - 1) q_plus = trace_y(W.q, i, e, false);
      v_jump = jump_y(Z.u, i, e);
      if (e == n) v_minus = trace_y(Z.u, i, n - 1, true);
      for (int q = 0; q < nq; ++q) {
        const double w = quad.weights[q] * jx;
        const double x = affine_map(x0, x1, quad.nodes[q]);
        if (e >= 1 && e <= n - 1) total += w * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(r_jump, basis, q);
        if (e <= n - 1) total += w * edge_poly_eval(q_plus, basis, q) * edge_poly_eval(v_jump, basis, q);
        if (e == n) {
          const auto q_minus = trace_y(W.q, i, n - 1, true);
          total -= w * edge_poly_eval(q_minus, basis, q) * edge_poly_eval(v_minus, basis, q);
        }
        if (e >= 1) {
          total -= w * problem.a2(x, ye) * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(v_jump, basis, q);
          if (e == n)
            total += w * flux.lambda2 * edge_poly_eval(u_minus, basis, q) * edge_poly_eval(v_minus, basis, q);
        }
      }
    }
  }

  return total;
}

Eigen::VectorXd to_vector(const DGSolution& w) {
  const int k = w.degree(), n = w.n();
  Eigen::VectorXd v(n_dofs(k, n));
  const DGField* fields[3] = {&w.u, &w.p, &w.q};
  for (int f = 0; f < 3; ++f)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int nn = 0; nn <= k; ++nn)
          for (int m = 0; m <= k; ++m) v[dof_index(k, n, f, i, j, m, nn)] = fields[f]->at(i, j, m, nn);
  return v;
}

DGSolution from_vector(const Eigen::VectorXd& v, int k, int n) {
  if (v.size() != n_dofs(k, n)) throw std::invalid_argument("from_vector: size mismatch");
  DGSolution w(k, n);
  DGField* fields[3] = {&w.u, &w.p, &w.q};
  for (int f = 0; f < 3; ++f)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int nn = 0; nn <= k; ++nn)
          for (int m = 0; m <= k; ++m) fields[f]->at(i, j, m, nn) = v[dof_index(k, n, f, i, j, m, nn)];
  return w;
}

void write_matrix_coordinate(const LinearSystem& sys, std::ostream& out) {
  char buf[96];
  for (int c = 0; c < sys.A.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.A, c); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%ld %ld %.17g\n", static_cast<long>(it.row()), static_cast<long>(it.col()),
                    it.value());
      out << buf;
    }
  }
}

}  // namespace ldg
