#include "viscolimit/otto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "viscolimit/quadrature.hpp"

namespace viscolimit {

namespace {

std::vector<double> time_weights(const SpaceTimeField& f) {
  std::vector<double> w(f.nt(), 0.0);
  for (int n = 0; n + 1 < f.nt(); ++n) {
    const double dt = f.times[n + 1] - f.times[n];
    w[n] += 0.5 * dt;
    w[n + 1] += 0.5 * dt;
  }
  return w;
}

// Cumulative table of z -> Q(z) for one boundary pair (all flux components).
struct QTable {
  double zmin = 0.0, dz = 1.0;
  int n = 0, dim = 1;
  std::vector<double> vals;  // vals[i*dim + j]

  static QTable build(const BoundaryEntropyPair& pair, const FluxModel& flux, double lo,
                      double hi, int nodes = 513) {
    QTable t;
    t.dim = flux.dim();
    lo = std::min(lo, pair.w);
    hi = std::max(hi, pair.w);
    const double pad = 1e-9 + 1e-6 * (hi - lo);
    lo -= pad;
    hi += pad;
    t.zmin = lo;
    t.n = nodes;
    t.dz = (hi - lo) / (nodes - 1);
    t.vals.assign(std::size_t(nodes) * t.dim, 0.0);
    for (int j = 0; j < t.dim; ++j) {
      // cumulative from w outward in both directions
      const auto integrand = [&](double r) { return pair.dH1(r) * flux.df(j, r); };
      std::vector<double> node_val(nodes, 0.0);
      // node index bracketing w
      int iw = int(std::floor((pair.w - lo) / t.dz));
      iw = std::max(0, std::min(nodes - 2, iw));
      node_val[iw] = integrate(integrand, pair.w, lo + iw * t.dz, 1e-11);
      for (int i = iw; i + 1 < nodes; ++i)
        node_val[i + 1] = node_val[i] + integrate(integrand, lo + i * t.dz, lo + (i + 1) * t.dz, 1e-11);
      for (int i = iw; i > 0; --i)
        node_val[i - 1] = node_val[i] - integrate(integrand, lo + (i - 1) * t.dz, lo + i * t.dz, 1e-11);
      for (int i = 0; i < nodes; ++i) t.vals[std::size_t(i) * t.dim + j] = node_val[i];
    }
    return t;
  }

  double q(double z, int j) const {
    double s = (z - zmin) / dz;
    s = std::max(0.0, std::min(double(n - 1), s));
    const int i = std::min(n - 2, int(s));
    const double frac = s - i;
    return (1.0 - frac) * vals[std::size_t(i) * dim + j] + frac * vals[std::size_t(i + 1) * dim + j];
  }
};

}  // namespace

std::vector<double> make_kgrid(double A) {
  std::vector<double> ks;
  if (A <= 0.0) return {0.0};
  for (int i = 0; i < 9; ++i) ks.push_back(-A + 2.0 * A * i / 8.0);
  bool has0 = false;
  for (double k : ks) has0 = has0 || std::abs(k) < 1e-15;
  if (!has0) ks.push_back(0.0);
  return ks;
}

double interior_entropy_residual(const SpaceTimeField& field, double k, const FluxModel& flux,
                                 const SpaceTimeBump& phi) {
  if (!phi.supported_inside(field.domain, field.times.back()))
    throw std::invalid_argument("interior_entropy_residual: phi support leaves Omega_T");
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();
  double acc = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    const double tn = field.times[n];
    if (tn < phi.t.lo() || tn > phi.t.hi()) continue;
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i) {
        const double px = field.x_center(i), py = field.y_center(j);
        if (px < phi.x.lo() || px > phi.x.hi()) continue;
        const double u = field.at(n, i, j);
        double term = std::abs(u - k) * phi.dt(px, py, tn);
        for (int a = 0; a < field.dim; ++a)
          term += sg(u - k) * (flux.f(a, u) - flux.f(a, k)) * phi.dx(px, py, tn, a);
        s += term;
      }
    acc += s * cv * wt[n];
  }
  return acc;
}

double interior_residual_min(const SpaceTimeField& field, const FluxModel& flux,
                             const std::vector<double>& kgrid,
                             const std::vector<SpaceTimeBump>& bumps) {
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();
  const int nt = field.nt(), nx = field.nx, ny = field.ny;
  double global_min = std::numeric_limits<double>::infinity();

  for (const auto& phi : bumps) {
    if (!phi.supported_inside(field.domain, field.times.back()))
      throw std::invalid_argument("interior_residual_min: phi support leaves Omega_T");
    // residual for every k of this bump, phi-derivatives evaluated once
    std::vector<double> acc(kgrid.size(), 0.0);
    std::vector<double> slice_acc(std::size_t(nt) * kgrid.size(), 0.0);
#pragma omp parallel for schedule(static)
    for (int n = 0; n < nt; ++n) {
      const double tn = field.times[n];
      if (tn < phi.t.lo() || tn > phi.t.hi()) continue;
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          const double px = field.x_center(i), py = field.y_center(j);
          if (px < phi.x.lo() || px > phi.x.hi()) continue;
          if (field.dim == 2 && (py < phi.y.lo() || py > phi.y.hi())) continue;
          const double u = field.at(n, i, j);
          const double pdt = phi.dt(px, py, tn);
          double pdx[2] = {phi.dx(px, py, tn, 0), 0.0};
          if (field.dim == 2) pdx[1] = phi.dx(px, py, tn, 1);
          for (std::size_t kk = 0; kk < kgrid.size(); ++kk) {
            const double k = kgrid[kk];
            double term = std::abs(u - k) * pdt;
            for (int a = 0; a < field.dim; ++a)
              term += sg(u - k) * (flux.f(a, u) - flux.f(a, k)) * pdx[a];
            slice_acc[std::size_t(n) * kgrid.size() + kk] += term;
          }
        }
    }
    for (int n = 0; n < nt; ++n)
      for (std::size_t kk = 0; kk < kgrid.size(); ++kk)
        acc[kk] += slice_acc[std::size_t(n) * kgrid.size() + kk] * cv * wt[n];
    for (double r : acc) global_min = std::min(global_min, r);
  }
  return global_min;
}

std::vector<double> default_boundary_offsets(const SpaceTimeField& field, int count) {
  std::vector<double> off;
  for (int k = 1; k <= count; ++k) off.push_back((k - 0.5) * field.hx);
  return off;
}

double window_average_limit(const std::vector<double>& offsets, const std::vector<double>& values,
                            int use) {
  const int P = std::min<int>(use, static_cast<int>(offsets.size()));
  if (P < 1) throw std::invalid_argument("window_average_limit: no samples");
  double integral = values[0] * offsets[0];  // rectangle back to h=0
  for (int m = 1; m < P; ++m)
    integral += 0.5 * (values[m - 1] + values[m]) * (offsets[m] - offsets[m - 1]);
  return integral / offsets[P - 1];
}

LimitEstimate boundary_flux_limit(const SpaceTimeField& field, const BoundaryEntropyPair& pair,
                                  const FluxModel& flux, const BoundaryWeight& beta,
                                  std::vector<double> offsets) {
  if (offsets.size() < 4)
    throw std::invalid_argument("boundary_flux_limit: need at least 4 offsets");
  std::sort(offsets.begin(), offsets.end());
  const double depth_x = 0.5 * field.domain.length(0);
  const double depth_y = field.dim == 2 ? 0.5 * field.domain.length(1) : 1e300;
  if (offsets.back() >= std::min(depth_x, depth_y))
    throw std::invalid_argument("boundary_flux_limit: offsets exceed domain depth");
  if (static_cast<int>(beta.face.size()) != 2 * field.dim)
    throw std::invalid_argument("boundary_flux_limit: beta needs one weight per face");
  for (double b : beta.face)
    if (b < 0.0) throw std::invalid_argument("boundary_flux_limit: beta must be >= 0");

  const double A = std::max(field.max_abs(), std::abs(pair.w)) + 1e-9;
  const QTable qt = QTable::build(pair, flux, -A, A);
  const auto wt = time_weights(field);

  LimitEstimate est;
  est.offsets = offsets;
  est.g.assign(offsets.size(), 0.0);

  for (std::size_t m = 0; m < offsets.size(); ++m) {
    const int ix = std::min(field.nx - 1, std::max(0, int(std::lround(offsets[m] / field.hx - 0.5))));
    const int iy = field.dim == 2
                       ? std::min(field.ny - 1, std::max(0, int(std::lround(offsets[m] / field.hy - 0.5))))
                       : 0;
    double g = 0.0;
    for (int n = 0; n < field.nt(); ++n) {
      double s = 0.0;
      if (field.dim == 1) {
        s += -qt.q(field.at(n, ix, 0), 0) * beta.face[0];                 // left, nu=-1
        s += +qt.q(field.at(n, field.nx - 1 - ix, 0), 0) * beta.face[1];  // right, nu=+1
      } else {
        for (int j = 0; j < field.ny; ++j) {
          s += -qt.q(field.at(n, ix, j), 0) * beta.face[0] * field.hy;
          s += +qt.q(field.at(n, field.nx - 1 - ix, j), 0) * beta.face[1] * field.hy;
        }
        for (int i = 0; i < field.nx; ++i) {
          s += -qt.q(field.at(n, i, iy), 1) * beta.face[2] * field.hx;
          s += +qt.q(field.at(n, i, field.ny - 1 - iy), 1) * beta.face[3] * field.hx;
        }
      }
      g += s * wt[n];
    }
    est.g[m] = g;
  }
  est.estimate = window_average_limit(est.offsets, est.g, 4);
  return est;
}

DecaySequence initial_trace_check(const SpaceTimeField& field,
                                  const std::function<double(double, double)>& u0,
                                  const std::vector<double>& times) {
  DecaySequence seq;
  for (double t : times) {
    int best = 0;
    for (int n = 1; n < field.nt(); ++n)
      if (std::abs(field.times[n] - t) < std::abs(field.times[best] - t)) best = n;
    seq.times.push_back(field.times[best]);
    seq.distances.push_back(field.l1_distance_at(best, u0));
  }
  seq.decreasing = true;
  for (std::size_t i = 0; i + 1 < seq.distances.size(); ++i)
    seq.decreasing = seq.decreasing &&
                     (seq.distances[i + 1] < seq.distances[i] || seq.distances[i + 1] <= 1e-14);
  seq.final_distance = seq.distances.empty() ? 0.0 : seq.distances.back();
  return seq;
}

BoundaryInequalityReport boundary_inequality_check(const SpaceTimeField& field,
                                                   const BoundaryEntropyPair& pair,
                                                   const FluxModel& flux,
                                                   const SpaceTimeBump& phi, double M,
                                                   double tol) {
  if (!phi.time_compact(field.times.back()))
    throw std::invalid_argument("boundary_inequality_check: phi must be compact in (0,T)");
  const double A = std::max(field.max_abs(), std::abs(pair.w)) + 1e-9;
  const QTable qt = QTable::build(pair, flux, -A - 1.0, A + 1.0);
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();

  double lhs = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    const double tn = field.times[n];
    if (tn < phi.t.lo() || tn > phi.t.hi()) continue;
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i) {
        const double px = field.x_center(i), py = field.y_center(j);
        const double u = field.at(n, i, j);
        double term = pair.H(u) * phi.dt(px, py, tn);
        for (int a = 0; a < field.dim; ++a) term += qt.q(u, a) * phi.dx(px, py, tn, a);
        s += term;
      }
    lhs -= s * cv * wt[n];
  }

  // boundary trace: one-sided linear extrapolation from the two innermost cells
  auto trace2 = [](double u1, double u2) { return 1.5 * u1 - 0.5 * u2; };
  double gamma = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    const double tn = field.times[n];
    if (tn < phi.t.lo() || tn > phi.t.hi()) continue;
    double s = 0.0;
    if (field.dim == 1) {
      const double uL = trace2(field.at(n, 0), field.at(n, 1));
      const double uR = trace2(field.at(n, field.nx - 1), field.at(n, field.nx - 2));
      s += pair.H(uL) * phi.value(field.domain.lo[0], 0.0, tn);
      s += pair.H(uR) * phi.value(field.domain.hi[0], 0.0, tn);
    } else {
      for (int j = 0; j < field.ny; ++j) {
        const double py = field.y_center(j);
        const double uL = trace2(field.at(n, 0, j), field.at(n, 1, j));
        const double uR = trace2(field.at(n, field.nx - 1, j), field.at(n, field.nx - 2, j));
        s += (pair.H(uL) * phi.value(field.domain.lo[0], py, tn) +
              pair.H(uR) * phi.value(field.domain.hi[0], py, tn)) *
             field.hy;
      }
      for (int i = 0; i < field.nx; ++i) {
        const double px = field.x_center(i);
        const double uB = trace2(field.at(n, i, 0), field.at(n, i, 1));
        const double uT = trace2(field.at(n, i, field.ny - 1), field.at(n, i, field.ny - 2));
        s += (pair.H(uB) * phi.value(px, field.domain.lo[1], tn) +
              pair.H(uT) * phi.value(px, field.domain.hi[1], tn)) *
             field.hx;
      }
    }
    gamma += s * wt[n];
  }

  BoundaryInequalityReport rep;
  rep.lhs = lhs;
  rep.rhs = M * field.dim * gamma;
  rep.tol = tol;
  rep.pass = lhs <= rep.rhs + tol;
  return rep;
}

}  // namespace viscolimit
