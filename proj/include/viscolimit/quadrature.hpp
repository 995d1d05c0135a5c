#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace viscolimit {

// Adaptive Simpson quadrature with absolute tolerance.
// Throws std::runtime_error if the recursion bottoms out before converging.
namespace detail {
inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_rec(const F& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (std::abs(a) + std::abs(b) + 1.0))
    return left + right + delta / 15.0;
  if (depth <= 0) throw std::runtime_error("adaptive Simpson failed to converge");
  return adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-9, int max_depth = 40) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) { std::swap(a, b); sign = -1.0; }
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = detail::simpson(a, b, fa, fm, fb);
  return sign * detail::adaptive_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Composite-Simpson nodes/weights on [-1,1], n panels (2n+1 nodes).
struct SimpsonRule {
  std::vector<double> node, weight;
  explicit SimpsonRule(int panels) {
    const int n = 2 * panels + 1;
    const double h = 2.0 / (n - 1);
    node.resize(n);
    weight.resize(n);
    for (int i = 0; i < n; ++i) {
      node[i] = -1.0 + i * h;
      double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      weight[i] = w * h / 3.0;
    }
  }
};

inline double trapezoid(const std::vector<double>& y, double dx) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * dx;
}

}  // namespace viscolimit
