#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldg {

// Parameters of the layer-adapted mesh. The generating function grades the
// mesh toward the outflow boundary; the transition point sits at distance
// tau = rho*eps*ln(1/eps) from it.
struct MeshConfig {
  int n = 8;           // elements per direction, even, >= 8
  double rho = 3.0;    // grading parameter
  double epsilon = 1e-6;
};

// Throws std::invalid_argument naming the violated bound.
void validate(const MeshConfig& cfg);

struct Mesh1D {
  MeshConfig config;
  std::vector<double> points;  // x_0 .. x_N
  std::vector<double> steps;   // h_i = x_i - x_{i-1}, steps[i-1]
  int transition_index = 0;    // N/2
  double tau = 0.0;            // 1 - x_{N/2}

  int n() const { return config.n; }
  double step(int i) const { return steps[i - 1]; }  // 1-based, matching h_i
};

// Mesh graded toward x = 1: x_i = 1 - phi((N-i)/N) for the generating
// function phi of the Bakhvalov-type mesh.
Mesh1D build_mesh_1d(const MeshConfig& cfg);

// The generating function itself (log branch on [0,1/2], linear on (1/2,1]).
double bakhvalov_phi(const MeshConfig& cfg, double d);

struct PropertyCheck {
  std::string name;
  double measured = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_pass() const;
};

// Report-only verification of the step-size bounds (distances measured
// from x = 1, i.e. the mirrored reading of the mesh lemma).
PropertyReport check_mesh_properties(const Mesh1D& mesh, const MeshConfig& cfg);

struct Mesh2D {
  Mesh1D x;
  Mesh1D y;
  int n() const { return x.config.n; }
};

Mesh2D build_mesh_2d(const MeshConfig& cfg_x, const MeshConfig& cfg_y);

// Debug dump, columns: i, x_i, h_i (h_0 written as 0).
void write_mesh_csv(const Mesh1D& mesh, std::ostream& out);

}  // namespace ldg
