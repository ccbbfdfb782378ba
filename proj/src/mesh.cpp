#include "ldg/mesh.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ldg {

void validate(const MeshConfig& cfg) {
  const auto fail = [](const std::string& msg) { throw std::invalid_argument("MeshConfig: " + msg); };
  if (cfg.n < 8 || cfg.n % 2 != 0) {
    fail("N must be even and >= 8 (got " + std::to_string(cfg.n) + ")");
  }
  if (!(cfg.rho > 0.0)) fail("rho must be > 0");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) fail("epsilon must lie in (0,1)");
  if (!(cfg.epsilon <= 1.0 / cfg.n)) {
    std::ostringstream os;
    os << "epsilon <= 1/N violated (epsilon=" << cfg.epsilon << ", N=" << cfg.n << ")";
    fail(os.str());
  }
  const double tau = cfg.rho * cfg.epsilon * std::log(1.0 / cfg.epsilon);
  if (!(tau < 0.5)) {
    std::ostringstream os;
    os << "rho*eps*ln(1/eps) = " << tau << " >= 1/2: transition point outside the graded branch";
    fail(os.str());
  }
}

double bakhvalov_phi(const MeshConfig& cfg, double d) {
  const double rho = cfg.rho, eps = cfg.epsilon;
  if (d <= 0.5) return -rho * eps * std::log(1.0 - 2.0 * (1.0 - eps) * d);
  const double tau = rho * eps * std::log(1.0 / eps);
  const double t = 2.0 * (1.0 - tau);  // continuity at d = 1/2
  return 1.0 - t * (1.0 - d);
}

Mesh1D build_mesh_1d(const MeshConfig& cfg) {
  validate(cfg);
  Mesh1D mesh;
  mesh.config = cfg;
  const int n = cfg.n;
  mesh.points.resize(n + 1);
  mesh.steps.resize(n);
  for (int i = 0; i <= n; ++i) {
    // Mirrored so the graded region resolves the layer at x = 1.
    mesh.points[i] = 1.0 - bakhvalov_phi(cfg, static_cast<double>(n - i) / n);
  }
  mesh.points[0] = 0.0;
  mesh.points[n] = 1.0;
  for (int i = 1; i <= n; ++i) {
    mesh.steps[i - 1] = mesh.points[i] - mesh.points[i - 1];
    if (!(mesh.steps[i - 1] > 0.0)) throw std::runtime_error("build_mesh_1d: points not strictly increasing");
  }
  mesh.transition_index = n / 2;
  mesh.tau = 1.0 - mesh.points[n / 2];
  return mesh;
}

bool PropertyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

PropertyReport check_mesh_properties(const Mesh1D& mesh, const MeshConfig& cfg) {
  PropertyReport report;
  const int n = cfg.n;
  const double rho = cfg.rho, eps = cfg.epsilon;
  const auto add = [&report](const std::string& name, double measured, double lo, double hi) {
    report.checks.push_back({name, measured, lo, hi, lo <= measured && measured <= hi});
  };

  add("x_0", mesh.points.front(), 0.0, 0.0);
  add("x_N", mesh.points.back(), 1.0, 1.0);

  double min_step = mesh.step(1);
  for (int i = 2; i <= n; ++i) min_step = std::min(min_step, mesh.step(i));
  add("min_step_positive", min_step, std::nextafter(0.0, 1.0), 1.0);

  const double tau = rho * eps * std::log(1.0 / eps);
  add("transition_point", std::abs((1.0 - mesh.points[n / 2]) - tau), 0.0, 5e-15);

  double coarse_dev = 0.0, coarse_min = mesh.step(1), coarse_max = mesh.step(1);
  for (int i = 1; i <= n / 2; ++i) {
    coarse_dev = std::max(coarse_dev, std::abs(mesh.step(i) - mesh.step(1)));
    coarse_min = std::min(coarse_min, mesh.step(i));
    coarse_max = std::max(coarse_max, mesh.step(i));
  }
  add("coarse_steps_equal", coarse_dev, 0.0, 1e-13);
  add("coarse_step_min", coarse_min, 1.0 / n, 2.0 / n);
  add("coarse_step_max", coarse_max, 1.0 / n, 2.0 / n);

  double max_increase = 0.0;
  for (int i = n / 2 + 2; i < n; ++i) max_increase = std::max(max_increase, mesh.step(i + 1) - mesh.step(i));
  add("fine_steps_nonincreasing", max_increase, 0.0, 1e-15);

  // Upper bound from the mean value theorem: h_N <= phi'(1/N)/N = 2*rho*eps*(1-eps)/(N-2(1-eps)),
  // which is <= 2*rho*eps/(N-2) and tight at N=8.  A plain 2*rho*eps/N is too small for every N
  // because -ln(1-u) > u.
  add("h_N", mesh.step(n), rho * eps / n, 2.0 * rho * eps / (n - 2.0));
  add("h_half_plus_2", mesh.step(n / 2 + 2), 0.25 * rho * eps, rho * eps);
  add("h_half_plus_1", mesh.step(n / 2 + 1), 0.5 * rho * eps, 2.0 * rho / n);
  return report;
}

Mesh2D build_mesh_2d(const MeshConfig& cfg_x, const MeshConfig& cfg_y) {
  if (cfg_x.n != cfg_y.n) throw std::invalid_argument("build_mesh_2d: N mismatch between directions");
  return {build_mesh_1d(cfg_x), build_mesh_1d(cfg_y)};
}

void write_mesh_csv(const Mesh1D& mesh, std::ostream& out) {
  out << "i,x_i,h_i\n";
  char buf[96];
  for (size_t i = 0; i < mesh.points.size(); ++i) {
    const double h = (i == 0) ? 0.0 : mesh.steps[i - 1];
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, mesh.points[i], h);
    out << buf;
  }
}

}  // namespace ldg
