#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldg/assembly.hpp"
#include "ldg/solver.hpp"

namespace ldg {

struct RunConfig {
  std::string problem = "layer_const";
  int degree = 1;
  std::vector<int> n_sweep = {8, 16, 32, 64};
  std::vector<double> eps_sweep = {1e-6};
  double rho = 0.0;  // <= 0 picks the default k+2
  FluxParams flux;
  int quad_order = 0;  // <= 0 picks the default k+3 (error norms always use k+5)
  SolverConfig solver;

  double effective_rho() const { return rho > 0.0 ? rho : degree + 2.0; }
  int effective_quad_order() const { return quad_order > 0 ? quad_order : degree + 3; }
};

struct TableRow {
  std::string problem;
  int k = 0;
  double epsilon = 0.0;
  double rho = 0.0;
  int n = 0;
  long dofs = 0;
  double superclose_E = 0.0;
  double superclose_u = 0.0;
  double superclose_p = 0.0;
  double superclose_q = 0.0;
  double superclose_jumps = 0.0;
  double l2_err = 0.0;
  double linf_eta_u = 0.0;
  std::optional<double> rate_superclose;
  std::optional<double> rate_l2;
  double log_adjusted_ratio = 0.0;  // superclose_E / (N^-(k+1) ln^(1/2) N)
  double solve_seconds = 0.0;
};

struct RowFailure {
  double epsilon = 0.0;
  int n = 0;
  std::string message;
};

struct ConvergenceTable {
  std::vector<TableRow> rows;
  std::vector<RowFailure> failures;
};

// Validates every sweep cell up front (violations listed exhaustively in the
// thrown message), then runs mesh -> assemble -> solve -> norms per cell.
// Per-cell runtime failures are recorded, never aborting the sweep.
ConvergenceTable run_convergence(const RunConfig& cfg);

void emit_csv(const ConvergenceTable& table, std::ostream& out);
void emit_markdown(const ConvergenceTable& table, std::ostream& out);
// format: "csv" or "md". Throws on an empty table or unwritable path.
void emit(const ConvergenceTable& table, const std::string& format, const std::string& path);
ConvergenceTable parse_csv(std::istream& in);

}  // namespace ldg
