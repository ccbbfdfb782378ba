#include "ldg/solver.hpp"

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

#include <chrono>
#include <stdexcept>

namespace ldg {

void validate(const SolverConfig& cfg) {
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol <= 1e-6))
    throw std::invalid_argument("SolverConfig: rel_tol must lie in (0, 1e-6]");
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
  if (cfg.restart < 1) throw std::invalid_argument("SolverConfig: restart must be >= 1");
}

SolverConfig::Method parse_method(const std::string& name) {
  if (name == "direct") return SolverConfig::Method::direct;
  if (name == "gmres") return SolverConfig::Method::gmres;
  throw std::invalid_argument("unknown solver method '" + name + "'");
}

DGSolution solve(const LinearSystem& sys, const SolverConfig& cfg, SolveStats* stats) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Eigen::VectorXd w;
  int iterations = 0;

  if (cfg.method == SolverConfig::Method::direct) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(sys.A);
    if (lu.info() != Eigen::Success) throw std::runtime_error("solve: sparse LU factorization failed");
    w = lu.solve(sys.rhs);
    if (lu.info() != Eigen::Success) throw std::runtime_error("solve: sparse LU back-substitution failed");
    // Iterative refinement; the factorization alone can miss rel_tol when
    // eps^-1 makes the system badly scaled.
    const double rhs_scale = sys.rhs.norm() > 0.0 ? sys.rhs.norm() : 1.0;
    for (int it = 0; it < 5; ++it) {
      const Eigen::VectorXd r = sys.rhs - sys.A * w;
      if (r.norm() <= 0.01 * cfg.rel_tol * rhs_scale) break;
      w += lu.solve(r);
    }
  } else {
    Eigen::GMRES<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> gmres;
    gmres.preconditioner().setDroptol(1e-8);
    gmres.preconditioner().setFillfactor(40);
    gmres.setTolerance(cfg.rel_tol);
    gmres.setMaxIterations(cfg.max_iter);
    gmres.set_restart(cfg.restart);
    gmres.compute(sys.A);
    if (gmres.info() != Eigen::Success) throw std::runtime_error("solve: GMRES preconditioner setup failed");
    w = gmres.solve(sys.rhs);
    iterations = static_cast<int>(gmres.iterations());
    if (gmres.info() != Eigen::Success)
      throw std::runtime_error("solve: GMRES failed to converge within " + std::to_string(cfg.max_iter) +
                               " iterations (error " + std::to_string(gmres.error()) + ")");
  }

  // Residual certificate, always recomputed serially from the raw matrix data.
  const double rhs_norm = sys.rhs.norm();
  const double residual = (sys.A * w - sys.rhs).norm() / (rhs_norm > 0.0 ? rhs_norm : 1.0);
  if (!(residual <= cfg.rel_tol))
    throw std::runtime_error("solve: residual certificate failed (" + std::to_string(residual) + " > rel_tol)");

  if (stats) {
    stats->iterations = iterations;
    stats->residual = residual;
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return from_vector(w, sys.degree, sys.n);
}

}  // namespace ldg
