#include "ldg/projections.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ldg {

namespace {

struct Condition {
  enum Type { interior, edge_x, edge_y, corner } type;
  int a = 0;       // x-moment index (interior / edge_y)
  int b = 0;       // y-moment index (interior / edge_x)
  double side = 1.0;  // +1: right/top face, -1: left/bottom face
};

std::vector<Condition> conditions_for(ProjectionKind kind, int k) {
  std::vector<Condition> c;
  switch (kind) {
    case ProjectionKind::pi_minus:
      for (int b = 0; b < k; ++b)
        for (int a = 0; a < k; ++a) c.push_back({Condition::interior, a, b, 0.0});
      for (int b = 0; b < k; ++b) c.push_back({Condition::edge_x, 0, b, +1.0});
      for (int a = 0; a < k; ++a) c.push_back({Condition::edge_y, a, 0, +1.0});
      c.push_back({Condition::corner, 0, 0, +1.0});
      break;
    case ProjectionKind::pi_x_minus:
    case ProjectionKind::pi_x_plus: {
      const double side = (kind == ProjectionKind::pi_x_minus) ? +1.0 : -1.0;
      for (int b = 0; b <= k; ++b)
        for (int a = 0; a < k; ++a) c.push_back({Condition::interior, a, b, 0.0});
      for (int b = 0; b <= k; ++b) c.push_back({Condition::edge_x, 0, b, side});
      break;
    }
    case ProjectionKind::pi_y_minus:
    case ProjectionKind::pi_y_plus: {
      const double side = (kind == ProjectionKind::pi_y_minus) ? +1.0 : -1.0;
      for (int b = 0; b < k; ++b)
        for (int a = 0; a <= k; ++a) c.push_back({Condition::interior, a, b, 0.0});
      for (int a = 0; a <= k; ++a) c.push_back({Condition::edge_y, a, 0, side});
      break;
    }
  }
  return c;
}

double endpoint(int m, double side) { return side > 0.0 ? 1.0 : ((m % 2 == 0) ? 1.0 : -1.0); }

// Row of the local moment matrix for one condition; columns ordered n*(k+1)+m.
void fill_row(const Condition& c, int k, Eigen::Ref<Eigen::RowVectorXd, 0, Eigen::InnerStride<>> row) {
  row.setZero();
  switch (c.type) {
    case Condition::interior:
      row[c.b * (k + 1) + c.a] = (2.0 / (2.0 * c.a + 1.0)) * (2.0 / (2.0 * c.b + 1.0));
      break;
    case Condition::edge_x:
      for (int m = 0; m <= k; ++m) row[c.b * (k + 1) + m] = endpoint(m, c.side) * (2.0 / (2.0 * c.b + 1.0));
      break;
    case Condition::edge_y:
      for (int nn = 0; nn <= k; ++nn) row[nn * (k + 1) + c.a] = endpoint(nn, c.side) * (2.0 / (2.0 * c.a + 1.0));
      break;
    case Condition::corner:
      row.setOnes();
      break;
  }
}

// Right-hand side of one condition, integrating z with the given rule.
double condition_rhs(const Condition& c, const ScalarFn& z, double x0, double x1, double y0, double y1, int k,
                     const QuadratureRule& quad, const BasisTable& basis) {
  const int nq = quad.size();
  double rhs = 0.0;
  switch (c.type) {
    case Condition::interior:
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        double inner = 0.0;
        for (int qx = 0; qx < nq; ++qx) {
          const double x = affine_map(x0, x1, quad.nodes[qx]);
          inner += quad.weights[qx] * z(x, y) * basis.val(qx, c.a);
        }
        rhs += quad.weights[qy] * basis.val(qy, c.b) * inner;
      }
      break;
    case Condition::edge_x: {
      const double xe = c.side > 0.0 ? x1 : x0;
      for (int qy = 0; qy < nq; ++qy) {
        const double y = affine_map(y0, y1, quad.nodes[qy]);
        rhs += quad.weights[qy] * z(xe, y) * basis.val(qy, c.b);
      }
      break;
    }
    case Condition::edge_y: {
      const double ye = c.side > 0.0 ? y1 : y0;
      for (int qx = 0; qx < nq; ++qx) {
        const double x = affine_map(x0, x1, quad.nodes[qx]);
        rhs += quad.weights[qx] * z(x, ye) * basis.val(qx, c.a);
      }
      break;
    }
    case Condition::corner:
      rhs = z(x1, y1);
      break;
  }
  return rhs;
}

}  // namespace

std::vector<double> project_element(const ScalarFn& z, const Mesh2D& mesh, int i, int j, ProjectionKind kind,
                                    int k, const QuadratureRule& quad) {
  if (k < 1) throw std::invalid_argument("project_element: k must be >= 1");
  const int dim = (k + 1) * (k + 1);
  const auto conds = conditions_for(kind, k);
  if (static_cast<int>(conds.size()) != dim) throw std::logic_error("project_element: condition count mismatch");

  const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
  const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
  const BasisTable basis = legendre_table(k, quad.nodes);

  Eigen::MatrixXd A(dim, dim);
  Eigen::VectorXd rhs(dim);
  for (int r = 0; r < dim; ++r) {
    fill_row(conds[r], k, A.row(r));
    rhs[r] = condition_rhs(conds[r], z, x0, x1, y0, y1, k, quad, basis);
  }
  const Eigen::VectorXd c = Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(rhs);
  if (!c.allFinite()) throw std::runtime_error("project_element: singular local moment system");
  return {c.data(), c.data() + dim};
}

DGField project_all(const ScalarFn& z, const Mesh2D& mesh, ProjectionKind kind, int k,
                    const QuadratureRule& quad) {
  DGField field(k, mesh.n());
  for (int j = 0; j < mesh.n(); ++j) {
    for (int i = 0; i < mesh.n(); ++i) {
      const auto block = project_element(z, mesh, i, j, kind, k, quad);
      std::copy(block.begin(), block.end(), field.coeff.begin() + field.index(i, j, 0, 0));
    }
  }
  return field;
}

DGField interpolate_P_minus(const ScalarFn& u, const Mesh2D& mesh, int k, const QuadratureRule& quad) {
  DGField field(k, mesh.n());
  const int half = mesh.n() / 2 - 1;  // 0-based element whose right/top face is the transition line
  for (int j = 0; j < mesh.n(); ++j) {
    for (int i = 0; i < mesh.n(); ++i) {
      ProjectionKind kind = ProjectionKind::pi_minus;
      if (i == half && j != half)
        kind = ProjectionKind::pi_x_minus;
      else if (j == half && i != half)
        kind = ProjectionKind::pi_y_minus;
      const auto block = project_element(u, mesh, i, j, kind, k, quad);
      std::copy(block.begin(), block.end(), field.coeff.begin() + field.index(i, j, 0, 0));
    }
  }
  return field;
}

std::pair<DGField, DGField> interpolate_flux(const ScalarFn& p, const ScalarFn& q, const Mesh2D& mesh, int k,
                                             const QuadratureRule& quad) {
  return {project_all(p, mesh, ProjectionKind::pi_x_plus, k, quad),
          project_all(q, mesh, ProjectionKind::pi_y_plus, k, quad)};
}

double moment_residual(const DGField& field, const ScalarFn& z, const Mesh2D& mesh, int i, int j,
                       ProjectionKind kind, const QuadratureRule& quad) {
  const int k = field.degree;
  const int dim = (k + 1) * (k + 1);
  const auto conds = conditions_for(kind, k);
  const double x0 = mesh.x.points[i], x1 = mesh.x.points[i + 1];
  const double y0 = mesh.y.points[j], y1 = mesh.y.points[j + 1];
  const BasisTable basis = legendre_table(k, quad.nodes);

  Eigen::VectorXd c(dim);
  for (int nn = 0; nn <= k; ++nn)
    for (int m = 0; m <= k; ++m) c[nn * (k + 1) + m] = field.at(i, j, m, nn);

  double zscale = 0.0;
  for (int qy = 0; qy < quad.size(); ++qy)
    for (int qx = 0; qx < quad.size(); ++qx)
      zscale = std::max(zscale, std::abs(z(affine_map(x0, x1, quad.nodes[qx]), affine_map(y0, y1, quad.nodes[qy]))));
  zscale = std::max(zscale, 1e-30);

  double max_res = 0.0;
  Eigen::RowVectorXd row(dim);
  for (const auto& cond : conds) {
    fill_row(cond, k, row);
    const double lhs = row.dot(c);
    const double rhs = condition_rhs(cond, z, x0, x1, y0, y1, k, quad, basis);
    max_res = std::max(max_res, std::abs(lhs - rhs) / zscale);
  }
  return max_res;
}

}  // namespace ldg
