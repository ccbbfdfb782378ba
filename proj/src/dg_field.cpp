#include "ldg/dg_field.hpp"

#include <stdexcept>

namespace ldg {

double DGField::eval_ref(int i, int j, double xhat, double yhat) const {
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("DGField::eval_ref: element index out of range");
  const int k = degree;
  std::vector<double> px(k + 1), dpx(k + 1), py(k + 1), dpy(k + 1);
  legendre_eval(k, xhat, px, dpx);
  legendre_eval(k, yhat, py, dpy);
  double v = 0.0;
  for (int nn = 0; nn <= k; ++nn)
    for (int m = 0; m <= k; ++m) v += at(i, j, m, nn) * px[m] * py[nn];
  return v;
}

std::vector<double> trace_x(const DGField& f, int i, int j, bool right) {
  const int k = f.degree;
  std::vector<double> t(k + 1, 0.0);
  for (int nn = 0; nn <= k; ++nn) {
    double s = 0.0;
    for (int m = 0; m <= k; ++m) {
      const double endpoint = right ? 1.0 : ((m % 2 == 0) ? 1.0 : -1.0);
      s += f.at(i, j, m, nn) * endpoint;
    }
    t[nn] = s;
  }
  return t;
}

std::vector<double> trace_y(const DGField& f, int i, int j, bool top) {
  const int k = f.degree;
  std::vector<double> t(k + 1, 0.0);
  for (int m = 0; m <= k; ++m) {
    double s = 0.0;
    for (int nn = 0; nn <= k; ++nn) {
      const double endpoint = top ? 1.0 : ((nn % 2 == 0) ? 1.0 : -1.0);
      s += f.at(i, j, m, nn) * endpoint;
    }
    t[m] = s;
  }
  return t;
}

std::vector<double> jump_x(const DGField& f, int edge, int j) {
  const int k = f.degree;
  if (edge < 0 || edge > f.n) throw std::out_of_range("jump_x: edge index out of range");
  if (edge == 0) return trace_x(f, 0, j, false);  // [[v]]_0 = v+
  if (edge == f.n) {
    auto t = trace_x(f, f.n - 1, j, true);  // [[v]]_N = -v-
    for (auto& c : t) c = -c;
    return t;
  }
  auto plus = trace_x(f, edge, j, false);
  const auto minus = trace_x(f, edge - 1, j, true);
  for (int nn = 0; nn <= k; ++nn) plus[nn] -= minus[nn];
  return plus;
}

std::vector<double> jump_y(const DGField& f, int i, int edge) {
  const int k = f.degree;
  if (edge < 0 || edge > f.n) throw std::out_of_range("jump_y: edge index out of range");
  if (edge == 0) return trace_y(f, i, 0, false);
  if (edge == f.n) {
    auto t = trace_y(f, i, f.n - 1, true);
    for (auto& c : t) c = -c;
    return t;
  }
  auto plus = trace_y(f, i, edge, false);
  const auto minus = trace_y(f, i, edge - 1, true);
  for (int m = 0; m <= k; ++m) plus[m] -= minus[m];
  return plus;
}

}  // namespace ldg
