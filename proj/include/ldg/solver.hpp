#pragma once

#include <string>

#include "ldg/assembly.hpp"
#include "ldg/dg_field.hpp"

namespace ldg {

struct SolverConfig {
  enum class Method { direct, gmres };
  Method method = Method::direct;
  double rel_tol = 1e-10;
  int max_iter = 5000;
  int restart = 100;
};

void validate(const SolverConfig& cfg);

struct SolveStats {
  int iterations = 0;      // 0 for the direct path
  double residual = 0.0;   // ||A w - rhs|| / ||rhs||, recomputed from raw data
  double seconds = 0.0;
};

// Throws std::runtime_error on factorization failure or non-convergence;
// never returns a silent partial answer.
DGSolution solve(const LinearSystem& sys, const SolverConfig& cfg, SolveStats* stats = nullptr);

SolverConfig::Method parse_method(const std::string& name);

}  // namespace ldg
