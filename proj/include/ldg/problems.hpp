#pragma once

#include <functional>
#include <string>

namespace ldg {

using ScalarFn = std::function<double(double, double)>;

// Coefficients and (optional) manufactured exact solution of the model
// convection-diffusion equation  -eps*Lap(u) + alpha.grad(u) + b*u = f
// on (0,1)^2 with homogeneous Dirichlet data.
struct ProblemSpec {
  std::string name;
  double epsilon = 0.0;
  ScalarFn a1, a2, b;
  ScalarFn div_alpha;  // closed form, never differenced
  ScalarFn f;
  bool has_exact = false;
  ScalarFn u, u_x, u_y;
  double alpha1 = 0.0;  // lower bound of a1 on the closed domain (layer decay rate)
  double alpha2 = 0.0;
  bool has_layer = false;
  double weight_min = 0.0;  // min over sample grid of b - 0.5*div_alpha
};

// Catalog: poly_patch, layer_const, layer_var. Throws on unknown name or
// on violated admissibility conditions (sampled on a 101x101 grid).
ProblemSpec make_problem(const std::string& name, double epsilon);

// Max abs residual of f - (-eps*Lap(u) + alpha.grad(u) + b*u) with the exact
// solution differenced to 4th order; `grid` sets the 1D smooth-region sample
// count. Throws if no exact solution is present.
double residual_check(const ProblemSpec& p, int grid);

}  // namespace ldg
