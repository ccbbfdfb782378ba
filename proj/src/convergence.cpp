#include "ldg/convergence.hpp"

#include "ldg/norms.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ldg {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

constexpr const char* kCsvHeader =
    "problem,k,epsilon,rho,N,dofs,superclose_E,superclose_u,superclose_p,superclose_q,superclose_jumps,"
    "l2_err,linf_eta_u,rate_superclose,rate_l2,log_adjusted_ratio,solve_seconds";

}  // namespace

ConvergenceTable run_convergence(const RunConfig& cfg) {
  // Validation before any work: list every violated cell.
  std::vector<std::string> violations;
  if (cfg.n_sweep.empty()) violations.push_back("empty N sweep");
  if (cfg.eps_sweep.empty()) violations.push_back("empty epsilon sweep");
  const double rho = cfg.effective_rho();
  if (rho < cfg.degree + 2) {
    violations.push_back("rho >= k+2 violated (rho=" + fmt(rho) + ", k=" + std::to_string(cfg.degree) + ")");
  }
  try {
    validate(cfg.flux);
    validate(cfg.solver);
  } catch (const std::exception& e) {
    violations.emplace_back(e.what());
  }
  for (double eps : cfg.eps_sweep) {
    for (int n : cfg.n_sweep) {
      try {
        validate(MeshConfig{n, rho, eps});
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << "(N=" << n << ", eps=" << eps << "): " << e.what();
        violations.push_back(os.str());
      }
    }
  }
  if (!violations.empty()) {
    std::string msg = "run_convergence: invalid configuration:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }

  const int k = cfg.degree;
  const QuadratureRule quad = gauss_legendre_rule(cfg.effective_quad_order());
  const QuadratureRule quad_err = gauss_legendre_rule(k + 5);

  ConvergenceTable table;
  for (double eps : cfg.eps_sweep) {
    const TableRow* prev = nullptr;
    for (int n : cfg.n_sweep) {
      try {
        const ProblemSpec problem = make_problem(cfg.problem, eps);
        const MeshConfig mesh_cfg{n, rho, eps};
        const Mesh2D mesh = build_mesh_2d(mesh_cfg, mesh_cfg);
        const LinearSystem sys = assemble(problem, mesh, k, cfg.flux, quad);
        SolveStats stats;
        const DGSolution W = solve(sys, cfg.solver, &stats);

        TableRow row;
        row.problem = cfg.problem;
        row.k = k;
        row.epsilon = eps;
        row.rho = rho;
        row.n = n;
        row.dofs = n_dofs(k, n);
        const ErrorBreakdown sc = supercloseness_error(W, problem, mesh, k, cfg.flux, quad_err);
        row.superclose_E = sc.total_E();
        row.superclose_u = std::sqrt(sc.u_weighted_l2_sq);
        row.superclose_p = std::sqrt(sc.p_scaled_l2_sq);
        row.superclose_q = std::sqrt(sc.q_scaled_l2_sq);
        row.superclose_jumps = std::sqrt(sc.jump_x_sq + sc.jump_y_sq);
        const TrueError te = true_error(W, problem, mesh, quad_err);
        row.l2_err = te.breakdown.total_2();
        row.linf_eta_u = te.linf_eta_u;
        row.log_adjusted_ratio = row.superclose_E / (std::pow(n, -(k + 1.0)) * std::sqrt(std::log(n)));
        row.solve_seconds = stats.seconds;
        if (prev && prev->n * 2 == n) {
          if (prev->superclose_E > 0.0 && row.superclose_E > 0.0)
            row.rate_superclose = std::log2(prev->superclose_E / row.superclose_E);
          if (prev->l2_err > 0.0 && row.l2_err > 0.0) row.rate_l2 = std::log2(prev->l2_err / row.l2_err);
        }
        table.rows.push_back(std::move(row));
        prev = &table.rows.back();
      } catch (const std::exception& e) {
        table.failures.push_back({eps, n, e.what()});
        prev = nullptr;
      }
    }
  }
  return table;
}

void emit_csv(const ConvergenceTable& table, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const auto& r : table.rows) {
    out << r.problem << ',' << r.k << ',' << fmt(r.epsilon) << ',' << fmt(r.rho) << ',' << r.n << ',' << r.dofs
        << ',' << fmt(r.superclose_E) << ',' << fmt(r.superclose_u) << ',' << fmt(r.superclose_p) << ','
        << fmt(r.superclose_q) << ',' << fmt(r.superclose_jumps) << ',' << fmt(r.l2_err) << ','
        << fmt(r.linf_eta_u) << ',' << fmt_opt(r.rate_superclose) << ',' << fmt_opt(r.rate_l2) << ','
        << fmt(r.log_adjusted_ratio) << ',' << fmt(r.solve_seconds) << "\n";
  }
}

void emit_markdown(const ConvergenceTable& table, std::ostream& out) {
  std::istringstream cols(kCsvHeader);
  std::string col, line1 = "|", line2 = "|";
  while (std::getline(cols, col, ',')) {
    line1 += " " + col + " |";
    line2 += " --- |";
  }
  out << line1 << "\n" << line2 << "\n";
  for (const auto& r : table.rows) {
    out << "| " << r.problem << " | " << r.k << " | " << fmt(r.epsilon) << " | " << fmt(r.rho) << " | " << r.n
        << " | " << r.dofs << " | " << fmt(r.superclose_E) << " | " << fmt(r.superclose_u) << " | "
        << fmt(r.superclose_p) << " | " << fmt(r.superclose_q) << " | " << fmt(r.superclose_jumps) << " | "
        << fmt(r.l2_err) << " | " << fmt(r.linf_eta_u) << " | " << fmt_opt(r.rate_superclose) << " | "
        << fmt_opt(r.rate_l2) << " | " << fmt(r.log_adjusted_ratio) << " | " << fmt(r.solve_seconds) << " |\n";
  }
}

void emit(const ConvergenceTable& table, const std::string& format, const std::string& path) {
  if (table.rows.empty()) throw std::invalid_argument("emit: table is empty");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open '" + path + "' for writing");
  if (format == "csv")
    emit_csv(table, out);
  else if (format == "md")
    emit_markdown(table, out);
  else
    throw std::invalid_argument("emit: unknown format '" + format + "'");
  out.flush();
  if (!out) throw std::runtime_error("emit: write to '" + path + "' failed");
}

ConvergenceTable parse_csv(std::istream& in) {
  ConvergenceTable table;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("parse_csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> f;
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (f.size() != 17) throw std::runtime_error("parse_csv: bad row '" + line + "'");
    TableRow r;
    r.problem = f[0];
    r.k = std::stoi(f[1]);
    r.epsilon = std::stod(f[2]);
    r.rho = std::stod(f[3]);
    r.n = std::stoi(f[4]);
    r.dofs = std::stol(f[5]);
    r.superclose_E = std::stod(f[6]);
    r.superclose_u = std::stod(f[7]);
    r.superclose_p = std::stod(f[8]);
    r.superclose_q = std::stod(f[9]);
    r.superclose_jumps = std::stod(f[10]);
    r.l2_err = std::stod(f[11]);
    r.linf_eta_u = std::stod(f[12]);
    if (!f[13].empty()) r.rate_superclose = std::stod(f[13]);
    if (!f[14].empty()) r.rate_l2 = std::stod(f[14]);
    r.log_adjusted_ratio = std::stod(f[15]);
    r.solve_seconds = std::stod(f[16]);
    table.rows.push_back(std::move(r));
  }
  return table;
}

}  // namespace ldg
