#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ldg/mesh.hpp"

using namespace ldg;

TEST_CASE("endpoints and transition point") {
  const MeshConfig cfg{8, 3.0, 1e-3};
  const auto mesh = build_mesh_1d(cfg);
  CHECK(mesh.points.front() == 0.0);
  CHECK(mesh.points.back() == 1.0);
  // 1 - x_4 = 3e-3 * ln(1e3)
  const double tau = 3e-3 * std::log(1e3);
  CHECK(1.0 - mesh.points[4] == doctest::Approx(tau).epsilon(1e-13));
  CHECK(mesh.tau == doctest::Approx(0.0207233).epsilon(1e-5));
  CHECK(mesh.transition_index == 4);
}

TEST_CASE("last step matches the generating function at d = 1/N") {
  const MeshConfig cfg{8, 3.0, 1e-3};
  const auto mesh = build_mesh_1d(cfg);
  const double expected = -3.0 * 1e-3 * std::log(1.0 - 2.0 * (1.0 - 1e-3) / 8.0);
  CHECK(mesh.step(8) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(mesh.step(8) == doctest::Approx(8.620e-4).epsilon(1e-3));
}

TEST_CASE("coarse region steps") {
  const MeshConfig cfg{8, 3.0, 1e-3};
  const auto mesh = build_mesh_1d(cfg);
  const double tau = 3e-3 * std::log(1e3);
  const double expected = 2.0 * (1.0 - tau) / 8.0;
  for (int i = 1; i <= 4; ++i) CHECK(mesh.step(i) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.2448).epsilon(1e-3));
  CHECK(expected >= 1.0 / 8.0);
  CHECK(expected <= 2.0 / 8.0);
}

TEST_CASE("mirror consistency") {
  const MeshConfig cfg{16, 4.0, 1e-5};
  const auto mesh = build_mesh_1d(cfg);
  for (int i = 0; i <= 16; ++i) {
    const double phi = bakhvalov_phi(cfg, static_cast<double>(16 - i) / 16.0);
    CHECK(std::abs((1.0 - mesh.points[i]) - phi) <= 1e-15);
  }
}

TEST_CASE("config validation diagnostics") {
  CHECK_THROWS_WITH_AS(build_mesh_1d({7, 3.0, 1e-3}), doctest::Contains("even"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_mesh_1d({8, 3.0, 0.5}), doctest::Contains("epsilon <= 1/N"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_mesh_1d({8, -1.0, 1e-3}), doctest::Contains("rho"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_mesh_1d({8, 3.0, 0.0}), doctest::Contains("(0,1)"), std::invalid_argument);
  // rho*eps*ln(1/eps) >= 1/2 regime is rejected, not silently meshed.
  CHECK_THROWS_WITH_AS(build_mesh_1d({8, 400.0, 1e-2}), doctest::Contains("transition"), std::invalid_argument);
}

TEST_CASE("property report sweep") {
  for (int n : {8, 16, 32, 64, 128, 256}) {
    for (double eps : {1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
      for (double rho : {3.0, 4.0, 5.0}) {
        const MeshConfig cfg{n, rho, eps};
        const auto mesh = build_mesh_1d(cfg);
        const auto report = check_mesh_properties(mesh, cfg);
        for (const auto& c : report.checks) {
          INFO("N=", n, " eps=", eps, " rho=", rho, " check=", c.name, " measured=", c.measured, " [", c.lower,
               ",", c.upper, "]");
          CHECK(c.pass);
        }
        CHECK(report.all_pass());
      }
    }
  }
}

TEST_CASE("monotone fine steps for N=64") {
  const MeshConfig cfg{64, 3.0, 1e-6};
  const auto mesh = build_mesh_1d(cfg);
  for (int i = 64 / 2 + 2; i < 64; ++i) CHECK(mesh.step(i + 1) <= mesh.step(i) + 1e-18);
}

TEST_CASE("tensor mesh") {
  const MeshConfig cfg{8, 3.0, 1e-3};
  const auto mesh = build_mesh_2d(cfg, cfg);
  CHECK(mesh.n() == 8);
  for (int i = 0; i <= 8; ++i) CHECK(mesh.x.points[i] == mesh.y.points[i]);
  CHECK_THROWS_AS(build_mesh_2d({8, 3.0, 1e-3}, {16, 3.0, 1e-3}), std::invalid_argument);
}

TEST_CASE("csv dump") {
  const auto mesh = build_mesh_1d({8, 3.0, 1e-3});
  std::ostringstream os;
  write_mesh_csv(mesh, os);
  const std::string s = os.str();
  CHECK(s.rfind("i,x_i,h_i\n", 0) == 0);
  size_t lines = 0;
  for (char c : s)
    if (c == '\n') ++lines;
  CHECK(lines == 10);  // header + 9 points
}
