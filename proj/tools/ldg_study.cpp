// Convergence-study driver: sweeps N and epsilon for one problem/degree,
// solves the LDG system on the layer-adapted mesh, and emits the error table.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ldg/convergence.hpp"
#include "ldg/mesh.hpp"
#include "ldg/norms.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LDG convergence study on a Bakhvalov-type layer-adapted mesh"};

  std::string problem = "layer_const";
  int degree = 1;
  std::string n_list = "8,16,32,64";
  std::string eps_list = "1e-6";
  double rho = 0.0;
  double lambda1 = 1.0, lambda2 = 1.0;
  int quad_order = 0;
  std::string solver = "direct";
  double tol = 1e-10;
  std::string format = "csv";
  std::string out_path;
  std::string mesh_dump, matrix_dump;

  app.add_option("--problem", problem, "problem name: poly_patch, layer_const, layer_var");
  app.add_option("--degree", degree, "polynomial degree k (>= 1)");
  app.add_option("--n", n_list, "comma list of N values");
  app.add_option("--epsilon", eps_list, "comma list of epsilon values");
  app.add_option("--rho", rho, "mesh grading parameter (default k+2)");
  app.add_option("--lambda1", lambda1, "penalty at x=1");
  app.add_option("--lambda2", lambda2, "penalty at y=1");
  app.add_option("--quad-order", quad_order, "assembly quadrature points per direction (default k+3)");
  app.add_option("--solver", solver, "direct or gmres");
  app.add_option("--tol", tol, "solver relative tolerance");
  app.add_option("--format", format, "output format: csv or md");
  app.add_option("--out", out_path, "output path (stdout if omitted)");
  app.add_option("--mesh-dump", mesh_dump, "write the 1D mesh of the first sweep cell as CSV");
  app.add_option("--matrix-dump", matrix_dump, "write the first cell's matrix in coordinate text format");

  CLI11_PARSE(app, argc, argv);

  ldg::RunConfig cfg;
  ldg::ConvergenceTable table;
  try {
    cfg.problem = problem;
    cfg.degree = degree;
    cfg.n_sweep = parse_int_list(n_list);
    cfg.eps_sweep = parse_double_list(eps_list);
    cfg.rho = rho;
    cfg.flux = {lambda1, lambda2};
    cfg.quad_order = quad_order;
    cfg.solver.method = ldg::parse_method(solver);
    cfg.solver.rel_tol = tol;

    if (!mesh_dump.empty()) {
      const ldg::MeshConfig mc{cfg.n_sweep.at(0), cfg.effective_rho(), cfg.eps_sweep.at(0)};
      std::ofstream out(mesh_dump);
      if (!out) throw std::runtime_error("cannot open '" + mesh_dump + "'");
      ldg::write_mesh_csv(ldg::build_mesh_1d(mc), out);
    }
    if (!matrix_dump.empty()) {
      const ldg::MeshConfig mc{cfg.n_sweep.at(0), cfg.effective_rho(), cfg.eps_sweep.at(0)};
      const auto mesh = ldg::build_mesh_2d(mc, mc);
      const auto prob = ldg::make_problem(cfg.problem, cfg.eps_sweep.at(0));
      const auto sys =
          ldg::assemble(prob, mesh, degree, cfg.flux, ldg::gauss_legendre_rule(cfg.effective_quad_order()));
      std::ofstream out(matrix_dump);
      if (!out) throw std::runtime_error("cannot open '" + matrix_dump + "'");
      ldg::write_matrix_coordinate(sys, out);
    }

    table = ldg::run_convergence(cfg);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  }

  for (const auto& f : table.failures)
    std::cerr << "cell failed (N=" << f.n << ", eps=" << f.epsilon << "): " << f.message << "\n";
  if (table.rows.empty()) {
    std::cerr << "all sweep cells failed\n";
    return 2;
  }

  try {
    if (out_path.empty()) {
      if (format == "csv")
        ldg::emit_csv(table, std::cout);
      else if (format == "md")
        ldg::emit_markdown(table, std::cout);
      else
        throw std::invalid_argument("unknown format '" + format + "'");
    } else {
      ldg::emit(table, format, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
