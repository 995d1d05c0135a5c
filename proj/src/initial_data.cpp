#include "viscolimit/initial_data.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "viscolimit/quadrature.hpp"

namespace viscolimit {

namespace {

double bump_raw(double t) {
  const double s = 1.0 - t * t;
  return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

double bump_norm() {
  static const double c = integrate([](double t) { return bump_raw(t); }, -1.0, 1.0, 1e-13);
  return c;
}

}  // namespace

double mollifier_rho(double t) { return bump_raw(t) / bump_norm(); }

double mollifier_drho(double t) {
  const double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return mollifier_rho(t) * (-2.0 * t / (s * s));
}

double mollifier_ddrho(double t) {
  const double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  const double w1 = -2.0 * t / (s * s);
  const double w2 = -2.0 * (1.0 + 3.0 * t * t) / (s * s * s);
  return mollifier_rho(t) * (w1 * w1 + w2);
}

namespace {

// C-infinity step: 0 for t<=0, 1 for t>=1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t), b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

// Per-axis partition of unity: face windows equal to 1 on a 2*eps band,
// decaying to 0 over the next 2*eps; interior window is the remainder.
struct AxisWindows {
  double lo, hi, eps;
  double wlo(double x) const { return 1.0 - smooth_step((x - (lo + 2 * eps)) / (2 * eps)); }
  double whi(double x) const { return 1.0 - smooth_step(((hi - 2 * eps) - x) / (2 * eps)); }
  double wmid(double x) const { return 1.0 - wlo(x) - whi(x); }
};

struct Blend {
  SpatialDomain dom;
  double eps;
  InitialDatum u0;
  AxisWindows ax, ay;

  double u0ext(double x, double y) const {
    if (x < dom.lo[0] || x > dom.hi[0]) return 0.0;
    if (dom.dim == 2 && (y < dom.lo[1] || y > dom.hi[1])) return 0.0;
    return u0(x, y);
  }

  // partition-blended inward translations; |v| <= sup|u0| pointwise
  double operator()(double x, double y) const {
    const double sx[3] = {-2 * eps, 0.0, 2 * eps};
    const double wx[3] = {ax.wlo(x), ax.wmid(x), ax.whi(x)};
    if (dom.dim == 1) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i)
        if (wx[i] != 0.0) v += wx[i] * u0ext(x + sx[i], y);
      return v;
    }
    const double sy[3] = {-2 * eps, 0.0, 2 * eps};
    const double wy[3] = {ay.wlo(y), ay.wmid(y), ay.whi(y)};
    double v = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double w = wx[i] * wy[j];
        if (w != 0.0) v += w * u0ext(x + sx[i], y + sy[j]);
      }
    return v;
  }
};

struct Kernel {
  std::vector<double> y;        // nodes scaled by eps
  std::vector<double> w0;       // rho weights, normalized to sum exactly 1
  std::vector<double> w1, w2;   // rho', rho'' weights (carry 1/eps, 1/eps^2)
};

Kernel make_kernel(double eps, int panels) {
  SimpsonRule rule(panels);
  Kernel k;
  const std::size_t n = rule.node.size();
  k.y.resize(n);
  k.w0.resize(n);
  k.w1.resize(n);
  k.w2.resize(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm += rule.weight[i] * mollifier_rho(rule.node[i]);
  for (std::size_t i = 0; i < n; ++i) {
    k.y[i] = eps * rule.node[i];
    k.w0[i] = rule.weight[i] * mollifier_rho(rule.node[i]) / norm;
    k.w1[i] = rule.weight[i] * mollifier_drho(rule.node[i]) / (norm * eps);
    k.w2[i] = rule.weight[i] * mollifier_ddrho(rule.node[i]) / (norm * eps * eps);
  }
  return k;
}

}  // namespace

MollifiedDatum mollify_dirichlet(const InitialDatum& u0, const SpatialDomain& domain, double eps) {
  domain.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("mollify_dirichlet: eps must be positive");
  if (!(eps < domain.min_length() / 10.0))
    throw std::invalid_argument("mollify_dirichlet: eps too large for domain (collar consumes it)");

  const int dim = domain.dim;
  auto blend = std::make_shared<Blend>(Blend{
      domain, eps, u0,
      AxisWindows{domain.lo[0], domain.hi[0], eps},
      AxisWindows{dim == 2 ? domain.lo[1] : 0.0, dim == 2 ? domain.hi[1] : 0.0, eps}});
  auto ker = std::make_shared<Kernel>(make_kernel(eps, dim == 1 ? 64 : 12));

  MollifiedDatum d;
  d.eps = eps;
  d.domain = domain;

  if (dim == 1) {
    d.eval = [blend, ker](double x, double) {
      double s = 0.0;
      for (std::size_t i = 0; i < ker->y.size(); ++i) s += ker->w0[i] * (*blend)(x - ker->y[i], 0.0);
      return s;
    };
    d.grad = [blend, ker](double x, double, int) {
      double s = 0.0;
      for (std::size_t i = 0; i < ker->y.size(); ++i) s += ker->w1[i] * (*blend)(x - ker->y[i], 0.0);
      return s;
    };
    d.laplacian = [blend, ker](double x, double) {
      double s = 0.0;
      for (std::size_t i = 0; i < ker->y.size(); ++i) s += ker->w2[i] * (*blend)(x - ker->y[i], 0.0);
      return s;
    };
  } else {
    auto conv = [blend, ker](double x, double y, const std::vector<double>& wx,
                             const std::vector<double>& wy) {
      double s = 0.0;
      for (std::size_t i = 0; i < ker->y.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < ker->y.size(); ++j)
          row += wy[j] * (*blend)(x - ker->y[i], y - ker->y[j]);
        s += wx[i] * row;
      }
      return s;
    };
    d.eval = [conv, ker](double x, double y) { return conv(x, y, ker->w0, ker->w0); };
    d.grad = [conv, ker](double x, double y, int axis) {
      return axis == 0 ? conv(x, y, ker->w1, ker->w0) : conv(x, y, ker->w0, ker->w1);
    };
    d.laplacian = [conv, ker](double x, double y) {
      return conv(x, y, ker->w2, ker->w0) + conv(x, y, ker->w0, ker->w2);
    };
  }

  // measured norms, midpoint rule
  if (dim == 1) {
    const double L = domain.length(0);
    const int n = std::min(4096, std::max(256, int(std::ceil(8.0 * L / eps))));
    d.sample_n = n;
    const double h = L / n;
    double sup = 0, l2 = 0, l1d = 0, g1 = 0, g2 = 0, lap1 = 0, tv = 0;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = domain.lo[0] + (i + 0.5) * h;
      const double u = d.eval(x, 0), g = d.grad(x, 0, 0), lp = d.laplacian(x, 0);
      sup = std::max(sup, std::abs(u));
      l2 += u * u * h;
      l1d += std::abs(u - u0(x, 0.0)) * h;
      g1 += std::abs(g) * h;
      g2 += g * g * h;
      lap1 += std::abs(lp) * h;
      if (i == 0) tv += std::abs(u);
      else tv += std::abs(u - prev);
      prev = u;
    }
    tv += std::abs(prev);
    d.sup_norm = sup;
    d.l2_norm_sq = l2;
    d.l1_dist_to_u0 = l1d;
    d.grad_l1 = g1;
    d.grad_l2_sq = g2;
    d.lap_l1 = lap1;
    d.total_variation = tv;
  } else {
    const double Lx = domain.length(0), Ly = domain.length(1);
    const int n = std::min(96, std::max(48, int(std::ceil(6.0 * std::max(Lx, Ly) / eps))));
    d.sample_n = n;
    const double hx = Lx / n, hy = Ly / n, da = hx * hy;
    double sup = 0, l2 = 0, l1d = 0, g1 = 0, g2 = 0, lap1 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = domain.lo[0] + (i + 0.5) * hx, y = domain.lo[1] + (j + 0.5) * hy;
        const double u = d.eval(x, y);
        const double gx = d.grad(x, y, 0), gy = d.grad(x, y, 1), lp = d.laplacian(x, y);
        sup = std::max(sup, std::abs(u));
        l2 += u * u * da;
        l1d += std::abs(u - u0(x, y)) * da;
        g1 += (std::abs(gx) + std::abs(gy)) * da;
        g2 += (gx * gx + gy * gy) * da;
        lap1 += std::abs(lp) * da;
      }
    d.sup_norm = sup;
    d.l2_norm_sq = l2;
    d.l1_dist_to_u0 = l1d;
    d.grad_l1 = g1;
    d.grad_l2_sq = g2;
    d.lap_l1 = lap1;
    d.total_variation = g1;  // gradient L1 is the smooth TV; boundary traces vanish
  }
  return d;
}

BoundsReport verify_initial_bounds(const MollifiedDatum& datum, double eps) {
  BoundsReport r;
  r.sup = datum.sup_norm;
  r.grad_l1 = datum.grad_l1;
  r.eps_lap_l1 = eps * datum.lap_l1;
  r.eps_grad_l2_sq = eps * datum.grad_l2_sq;
  return r;
}

}  // namespace viscolimit
