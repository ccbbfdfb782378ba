#include "ldg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ldg {

namespace {

// 1D layer factor g(s) = s(1 - exp(-(1-s)/eps)) and derivatives.
struct LayerFactor {
  double eps;
  double g(double s) const { return s * (1.0 - std::exp(-(1.0 - s) / eps)); }
  double dg(double s) const {
    const double e = std::exp(-(1.0 - s) / eps);
    return 1.0 - (1.0 + s / eps) * e;
  }
  double d2g(double s) const {
    const double e = std::exp(-(1.0 - s) / eps);
    return -(1.0 / eps) * (2.0 + s / eps) * e;
  }
};

void check_admissibility(ProblemSpec& p) {
  constexpr int n = 101;
  double wmin = std::numeric_limits<double>::infinity();
  double uscale = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = static_cast<double>(i) / (n - 1);
      const double y = static_cast<double>(j) / (n - 1);
      if (!(p.a1(x, y) > 0.0)) throw std::invalid_argument(p.name + ": a1 not positive at sample point");
      if (!(p.a2(x, y) > 0.0)) throw std::invalid_argument(p.name + ": a2 not positive at sample point");
      const double w = p.b(x, y) - 0.5 * p.div_alpha(x, y);
      if (!(w > 0.0)) throw std::invalid_argument(p.name + ": b - div(alpha)/2 not positive at sample point");
      wmin = std::min(wmin, w);
      if (p.has_exact) uscale = std::max(uscale, std::abs(p.u(x, y)));
    }
  }
  p.weight_min = wmin;
  if (p.has_exact) {
    for (int i = 0; i < n; ++i) {
      const double s = static_cast<double>(i) / (n - 1);
      for (double v : {p.u(s, 0.0), p.u(s, 1.0), p.u(0.0, s), p.u(1.0, s)}) {
        if (std::abs(v) > 1e-12 * std::max(uscale, 1.0))
          throw std::invalid_argument(p.name + ": exact solution does not vanish on the boundary");
      }
    }
  }
}

}  // namespace

ProblemSpec make_problem(const std::string& name, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("make_problem: epsilon must lie in (0,1)");
  ProblemSpec p;
  p.name = name;
  p.epsilon = epsilon;
  const double eps = epsilon;

  if (name == "poly_patch") {
    p.a1 = p.a2 = [](double, double) { return 1.0; };
    p.b = [](double, double) { return 2.0; };
    p.div_alpha = [](double, double) { return 0.0; };
    p.alpha1 = p.alpha2 = 1.0;
    p.has_exact = true;
    p.has_layer = false;
    p.u = [](double x, double y) { return x * (1.0 - x) * y * (1.0 - y); };
    p.u_x = [](double x, double y) { return (1.0 - 2.0 * x) * y * (1.0 - y); };
    p.u_y = [](double x, double y) { return x * (1.0 - x) * (1.0 - 2.0 * y); };
    p.f = [eps](double x, double y) {
      const double gx = x * (1.0 - x), gy = y * (1.0 - y);
      return -eps * (-2.0 * gy - 2.0 * gx) + (1.0 - 2.0 * x) * gy + gx * (1.0 - 2.0 * y) + 2.0 * gx * gy;
    };
  } else if (name == "layer_const" || name == "layer_var") {
    const LayerFactor lf{eps};
    p.has_exact = true;
    p.has_layer = true;
    p.u = [lf](double x, double y) { return lf.g(x) * lf.g(y); };
    p.u_x = [lf](double x, double y) { return lf.dg(x) * lf.g(y); };
    p.u_y = [lf](double x, double y) { return lf.g(x) * lf.dg(y); };
    if (name == "layer_const") {
      p.a1 = p.a2 = [](double, double) { return 1.0; };
      p.b = [](double, double) { return 2.0; };
      p.div_alpha = [](double, double) { return 0.0; };
      p.alpha1 = p.alpha2 = 1.0;
      p.f = [lf, eps](double x, double y) {
        return -eps * (lf.d2g(x) * lf.g(y) + lf.g(x) * lf.d2g(y)) + lf.dg(x) * lf.g(y) + lf.g(x) * lf.dg(y) +
               2.0 * lf.g(x) * lf.g(y);
      };
    } else {
      p.a1 = [](double x, double) { return 2.0 + x; };
      p.a2 = [](double, double y) { return 2.0 + y; };
      p.b = [](double, double) { return 4.0; };
      p.div_alpha = [](double, double) { return 2.0; };
      p.alpha1 = p.alpha2 = 2.0;
      p.f = [lf, eps](double x, double y) {
        return -eps * (lf.d2g(x) * lf.g(y) + lf.g(x) * lf.d2g(y)) + (2.0 + x) * lf.dg(x) * lf.g(y) +
               (2.0 + y) * lf.g(x) * lf.dg(y) + 4.0 * lf.g(x) * lf.g(y);
      };
    }
  } else {
    throw std::invalid_argument("make_problem: unknown problem name '" + name + "'");
  }

  check_admissibility(p);
  return p;
}

namespace {

double fd_first(const std::function<double(double)>& v, double x, double d) {
  return (v(x - 2 * d) - 8.0 * v(x - d) + 8.0 * v(x + d) - v(x + 2 * d)) / (12.0 * d);
}

double fd_second(const std::function<double(double)>& v, double x, double d) {
  return (-v(x - 2 * d) + 16.0 * v(x - d) - 30.0 * v(x) + 16.0 * v(x + d) - v(x + 2 * d)) / (12.0 * d * d);
}

}  // namespace

double residual_check(const ProblemSpec& p, int grid) {
  if (!p.has_exact) throw std::invalid_argument("residual_check: problem has no exact solution");
  const double eps = p.epsilon;
  const double d_far = p.has_layer ? 1e-3 : 1e-2;
  const double d_near = eps / 100.0;

  std::vector<double> samples;
  const double lo = 4.0 * d_far, hi = 1.0 - 4.0 * d_far;
  for (int i = 0; i < grid; ++i) samples.push_back(lo + (hi - lo) * i / (grid - 1));
  if (p.has_layer) {
    for (double t : {0.2, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0, 30.0}) {
      const double s = 1.0 - eps * t;
      if (s > 4.0 * d_near) samples.push_back(s);
    }
  }
  std::sort(samples.begin(), samples.end());

  const auto step_for = [&](double s) {
    if (!p.has_layer) return d_far;
    return (1.0 - s) < 40.0 * eps ? d_near : d_far;
  };

  double max_res = 0.0;
  for (double x : samples) {
    for (double y : samples) {
      const double dx = step_for(x), dy = step_for(y);
      const auto ux = [&](double s) { return p.u(s, y); };
      const auto uy = [&](double s) { return p.u(x, s); };
      const double uxx = fd_second(ux, x, dx);
      const double uyy = fd_second(uy, y, dy);
      const double dux = fd_first(ux, x, dx);
      const double duy = fd_first(uy, y, dy);
      const double res =
          p.f(x, y) - (-eps * (uxx + uyy) + p.a1(x, y) * dux + p.a2(x, y) * duy + p.b(x, y) * p.u(x, y));
      max_res = std::max(max_res, std::abs(res));
    }
  }
  return max_res;
}

}  // namespace ldg
