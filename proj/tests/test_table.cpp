#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ldg/convergence.hpp"

using namespace ldg;

TEST_CASE("defaults derive from the degree") {
  RunConfig cfg;
  cfg.degree = 2;
  CHECK(cfg.effective_rho() == 4.0);
  CHECK(cfg.effective_quad_order() == 5);
  cfg.rho = 3.5;
  cfg.quad_order = 7;
  CHECK(cfg.effective_rho() == 3.5);
  CHECK(cfg.effective_quad_order() == 7);
}

TEST_CASE("sweep validation lists every violation up front") {
  RunConfig cfg;
  cfg.problem = "layer_const";
  cfg.degree = 1;
  cfg.n_sweep = {8, 7};
  cfg.eps_sweep = {1e-6, 0.5};
  try {
    run_convergence(cfg);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("7") != std::string::npos);
    CHECK(msg.find("0.5") != std::string::npos);
  }
}

TEST_CASE("single cell run produces a complete row") {
  RunConfig cfg;
  cfg.problem = "poly_patch";
  cfg.degree = 1;
  cfg.n_sweep = {8, 16};
  cfg.eps_sweep = {1e-3};
  const auto table = run_convergence(cfg);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.failures.empty());
  const auto& r0 = table.rows[0];
  CHECK(r0.problem == "poly_patch");
  CHECK(r0.k == 1);
  CHECK(r0.n == 8);
  CHECK(r0.dofs == 3L * 64 * 4);
  CHECK(r0.superclose_E >= 0.0);
  CHECK(r0.solve_seconds > 0.0);
  CHECK(!r0.rate_superclose.has_value());
  CHECK(table.rows[1].rate_superclose.has_value());
  CHECK(table.rows[1].rate_l2.has_value());
}

TEST_CASE("csv round trip preserves every field") {
  RunConfig cfg;
  cfg.problem = "layer_const";
  cfg.degree = 1;
  cfg.n_sweep = {8, 16};
  cfg.eps_sweep = {1e-4};
  const auto table = run_convergence(cfg);
  std::ostringstream os;
  emit_csv(table, os);
  CHECK(os.str().rfind("problem,k,epsilon,rho,N,dofs,superclose_E,", 0) == 0);

  std::istringstream is(os.str());
  const auto back = parse_csv(is);
  REQUIRE(back.rows.size() == table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& a = table.rows[r];
    const auto& b = back.rows[r];
    CHECK(a.problem == b.problem);
    CHECK(a.k == b.k);
    CHECK(a.epsilon == b.epsilon);
    CHECK(a.rho == b.rho);
    CHECK(a.n == b.n);
    CHECK(a.dofs == b.dofs);
    CHECK(a.superclose_E == b.superclose_E);
    CHECK(a.superclose_u == b.superclose_u);
    CHECK(a.superclose_p == b.superclose_p);
    CHECK(a.superclose_q == b.superclose_q);
    CHECK(a.superclose_jumps == b.superclose_jumps);
    CHECK(a.l2_err == b.l2_err);
    CHECK(a.linf_eta_u == b.linf_eta_u);
    CHECK(a.rate_superclose.has_value() == b.rate_superclose.has_value());
    if (a.rate_superclose) CHECK(*a.rate_superclose == *b.rate_superclose);
    if (a.rate_l2) CHECK(*a.rate_l2 == *b.rate_l2);
    CHECK(a.log_adjusted_ratio == b.log_adjusted_ratio);
    CHECK(a.solve_seconds == b.solve_seconds);
  }
}

TEST_CASE("csv emission is deterministic apart from timing") {
  RunConfig cfg;
  cfg.problem = "poly_patch";
  cfg.degree = 1;
  cfg.n_sweep = {8};
  cfg.eps_sweep = {1e-3};
  auto t1 = run_convergence(cfg);
  auto t2 = run_convergence(cfg);
  t1.rows[0].solve_seconds = t2.rows[0].solve_seconds = 0.0;
  std::ostringstream o1, o2;
  emit_csv(t1, o1);
  emit_csv(t2, o2);
  CHECK(o1.str() == o2.str());
}

TEST_CASE("markdown table mirrors the csv columns") {
  RunConfig cfg;
  cfg.problem = "poly_patch";
  cfg.degree = 1;
  cfg.n_sweep = {8};
  cfg.eps_sweep = {1e-3};
  const auto table = run_convergence(cfg);
  std::ostringstream os;
  emit_markdown(table, os);
  const std::string s = os.str();
  CHECK(s.find("| problem |") != std::string::npos);
  CHECK(s.find("superclose_E") != std::string::npos);
  CHECK(s.find("poly_patch") != std::string::npos);
}

TEST_CASE("emit rejects empty tables and bad paths") {
  ConvergenceTable empty;
  CHECK_THROWS_AS(emit(empty, "csv", "/tmp/ldg_table_test.csv"), std::invalid_argument);
  RunConfig cfg;
  cfg.problem = "poly_patch";
  cfg.degree = 1;
  cfg.n_sweep = {8};
  cfg.eps_sweep = {1e-3};
  const auto table = run_convergence(cfg);
  CHECK_THROWS_AS(emit(table, "csv", "/nonexistent_dir/t.csv"), std::runtime_error);
  CHECK_THROWS_AS(emit(table, "yaml", "/tmp/ldg_table_test.csv"), std::invalid_argument);
}

TEST_CASE("parse rejects a mangled header") {
  std::istringstream is("problem,k\nfoo,1\n");
  CHECK_THROWS_AS(parse_csv(is), std::runtime_error);
}
