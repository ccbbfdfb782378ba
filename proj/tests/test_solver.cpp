#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ldg/norms.hpp"
#include "ldg/projections.hpp"
#include "ldg/solver.hpp"

using namespace ldg;

TEST_CASE("method names parse") {
  CHECK(parse_method("direct") == SolverConfig::Method::direct);
  CHECK(parse_method("gmres") == SolverConfig::Method::gmres);
  CHECK_THROWS_AS(parse_method("cholesky"), std::invalid_argument);
}

TEST_CASE("config validation") {
  SolverConfig cfg;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.rel_tol = 1e-3;  // looser than the certificate allows
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.rel_tol = 1e-10;
  cfg.max_iter = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("diagonal system solves exactly") {
  LinearSystem sys;
  sys.degree = 1;
  sys.n = 2;
  const long n = n_dofs(1, 2);
  sys.A.resize(n, n);
  sys.rhs.resize(n);
  for (long t = 0; t < n; ++t) {
    sys.A.insert(t, t) = 2.0 + t;
    sys.rhs[t] = 1.0 + 0.5 * t;
  }
  sys.A.makeCompressed();
  for (auto method : {SolverConfig::Method::direct, SolverConfig::Method::gmres}) {
    SolverConfig cfg;
    cfg.method = method;
    SolveStats stats;
    const auto w = solve(sys, cfg, &stats);
    const auto v = to_vector(w);
    for (long t = 0; t < n; ++t) CHECK(v[t] == doctest::Approx((1.0 + 0.5 * t) / (2.0 + t)).epsilon(1e-12));
    CHECK(stats.residual <= cfg.rel_tol);
    CHECK(stats.seconds >= 0.0);
  }
}

TEST_CASE("polynomial problem is solved to interpolation accuracy") {
  const double eps = 1e-3;
  const auto p = make_problem("poly_patch", eps);
  const auto mesh = build_mesh_2d({8, 4.0, eps}, {8, 4.0, eps});
  const int k = 2;
  const auto quad = gauss_legendre_rule(k + 3);
  const auto sys = assemble(p, mesh, k, {}, quad);
  const auto W = solve(sys, {});

  const auto exact_u = project_all(p.u, mesh, ProjectionKind::pi_minus, k, quad);
  double max_diff = 0.0;
  for (size_t t = 0; t < W.u.coeff.size(); ++t)
    max_diff = std::max(max_diff, std::abs(W.u.coeff[t] - exact_u.coeff[t]));
  CHECK(max_diff <= 1e-8);
}

TEST_CASE("direct and gmres agree on a layer problem") {
  const double eps = 1e-4;
  const auto p = make_problem("layer_const", eps);
  const auto mesh = build_mesh_2d({16, 3.0, eps}, {16, 3.0, eps});
  const auto sys = assemble(p, mesh, 1, {}, gauss_legendre_rule(4));

  const auto wd = solve(sys, {});
  SolverConfig ig;
  ig.method = SolverConfig::Method::gmres;
  SolveStats stats;
  const auto wi = solve(sys, ig, &stats);
  CHECK(stats.iterations >= 1);
  CHECK((to_vector(wd) - to_vector(wi)).norm() <= 1e-8 * to_vector(wd).norm());
}

TEST_CASE("non-convergence raises instead of returning a partial answer") {
  LinearSystem sys;
  sys.degree = 1;
  sys.n = 2;
  const long n = n_dofs(1, 2);
  sys.A.resize(n, n);
  sys.rhs.setOnes(n);
  // Singular: one empty row/column.
  for (long t = 0; t + 1 < n; ++t) sys.A.insert(t, t) = 1.0;
  sys.A.makeCompressed();
  CHECK_THROWS_AS(solve(sys, {}), std::runtime_error);
  SolverConfig ig;
  ig.method = SolverConfig::Method::gmres;
  ig.max_iter = 3;
  CHECK_THROWS_AS(solve(sys, ig), std::runtime_error);
}
