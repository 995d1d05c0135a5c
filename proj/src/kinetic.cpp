#include "viscolimit/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "viscolimit/entropy.hpp"
#include "viscolimit/kernels.hpp"

namespace viscolimit {

CGrid default_cgrid(double A, int n) {
  const double m = A > 0.0 ? 1.2 * A : 1.0;
  return {-m, m, n};
}

double chi(double u, double c) {
  if (u < c && c < 0.0) return 1.0;
  if (0.0 < c && c < u) return -1.0;
  return 0.0;
}

double chi_integral_identity(double u, const CGrid& grid) {
  if (grid.c_lo > std::min(0.0, u) || grid.c_hi < std::max(0.0, u))
    throw std::invalid_argument("chi_integral_identity: c-grid does not cover I[0,u]");
  const double dc = grid.dc();
  double s = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
    s += w * chi(u, grid.node(i));
  }
  return s * dc;
}

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

void check_psi_support(const SpaceTimeField& field, const CGrid& grid, const KineticBump& psi) {
  const bool ok_x = psi.x.lo() > field.domain.lo[0] && psi.x.hi() < field.domain.hi[0];
  const bool ok_y = field.dim == 1 ||
                    (psi.y.lo() > field.domain.lo[1] && psi.y.hi() < field.domain.hi[1]);
  const bool ok_c = psi.c.lo() > grid.c_lo && psi.c.hi() < grid.c_hi;
  const bool ok_t = psi.t.lo() > 0.0 && psi.t.hi() < field.times.back();
  if (!(ok_x && ok_y && ok_c && ok_t))
    throw std::invalid_argument("kinetic test function must be compact in Omega x (-M,M) x (0,T)");
}

// gradient of one slice, centered in the interior, one-sided at the collar
double grad_component(const SpaceTimeField& f, int n, int i, int j, int axis) {
  if (axis == 0) {
    if (i == 0) return (f.at(n, 1, j) - f.at(n, 0, j)) / f.hx;
    if (i == f.nx - 1) return (f.at(n, f.nx - 1, j) - f.at(n, f.nx - 2, j)) / f.hx;
    return (f.at(n, i + 1, j) - f.at(n, i - 1, j)) / (2.0 * f.hx);
  }
  if (j == 0) return (f.at(n, i, 1) - f.at(n, i, 0)) / f.hy;
  if (j == f.ny - 1) return (f.at(n, i, f.ny - 1) - f.at(n, i, f.ny - 2)) / f.hy;
  return (f.at(n, i, j + 1) - f.at(n, i, j - 1)) / (2.0 * f.hy);
}

}  // namespace

DefectDensity DefectDensity::build(const SpaceTimeField& field, const ProblemSpec& spec,
                                   const CGrid& grid) {
  DefectDensity d;
  d.field = &field;
  d.eps = field.eps;
  d.cgrid = grid;
  d.diffusion.assign(std::size_t(field.nt()) * field.nx * field.ny, 0.0);
  for (int n = 0; n < field.nt(); ++n) {
    double* out = d.diffusion.data() + std::size_t(n) * field.nx * field.ny;
    if (field.dim == 1)
      kernels::diffusion_operator_1d(field.slice(n), field.nx, field.hx, spec.viscosity, out);
    else
      kernels::diffusion_operator_2d(field.slice(n), field.nx, field.ny, field.hx, field.hy,
                                     spec.viscosity, out);
  }
  return d;
}

double DefectDensity::at(int n, int i, int j, double c) const {
  const double u = field->at(n, i, j);
  const double L = diffusion[(std::size_t(n) * field->ny + j) * field->nx + i];
  return 0.5 * eps * sg(u - c) * L;
}

double DefectDensity::total_abs() const {
  const auto wt = time_weights(*field);
  const double cv = field->cell_volume();
  const double dc = cgrid.dc();
  double s = 0.0;
  for (int n = 0; n < field->nt(); ++n) {
    double sl = 0.0;
    for (int j = 0; j < field->ny; ++j)
      for (int i = 0; i < field->nx; ++i) {
        const double u = field->at(n, i, j);
        const double L = std::abs(diffusion[(std::size_t(n) * field->ny + j) * field->nx + i]);
        // int |sg(u-c)| dc over the grid window = covered length (u=c is a null set)
        double clen = 0.0;
        for (int m = 0; m < cgrid.n; ++m) {
          const double w = (m == 0 || m == cgrid.n - 1) ? 0.5 : 1.0;
          clen += w * std::abs(sg(u - cgrid.node(m)));
        }
        sl += 0.5 * eps * L * clen * dc;
      }
    s += sl * cv * wt[n];
  }
  return s;
}

double kinetic_weak_residual(const SpaceTimeField& field, const ProblemSpec& spec,
                             const CGrid& grid, const KineticBump& psi) {
  check_psi_support(field, grid, psi);
  const DefectDensity defect = DefectDensity::build(field, spec, grid);
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();
  const double dc = grid.dc();
  const int nt = field.nt(), nx = field.nx, ny = field.ny, nc = grid.n;

  // cached axis profiles
  std::vector<double> fx(nx), dfx(nx), fy(std::max(1, ny)), dfy(std::max(1, ny));
  for (int i = 0; i < nx; ++i) {
    fx[i] = psi.x.value(field.x_center(i));
    dfx[i] = psi.x.deriv(field.x_center(i));
  }
  for (int j = 0; j < ny; ++j) {
    fy[j] = field.dim == 2 ? psi.y.value(field.y_center(j)) : 1.0;
    dfy[j] = field.dim == 2 ? psi.y.deriv(field.y_center(j)) : 0.0;
  }
  std::vector<double> fc(nc), dfc(nc), wc(nc), fpc(std::size_t(nc) * field.dim);
  for (int m = 0; m < nc; ++m) {
    const double c = grid.node(m);
    fc[m] = psi.c.value(c);
    dfc[m] = psi.c.deriv(c);
    wc[m] = (m == 0 || m == nc - 1) ? 0.5 * dc : dc;
    for (int a = 0; a < field.dim; ++a) fpc[std::size_t(m) * field.dim + a] = spec.flux.df(a, c);
  }

  std::vector<double> slice_acc(nt, 0.0);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < nt; ++n) {
    const double tn = field.times[n];
    const double bt = psi.t.value(tn), dbt = psi.t.deriv(tn);
    if (bt == 0.0 && dbt == 0.0) continue;
    double s = 0.0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const double u = field.at(n, i, j);
        const double L = defect.diffusion[(std::size_t(n) * ny + j) * nx + i];
        const double sxy = fx[i] * fy[j];
        const double dx_part = dfx[i] * fy[j];
        const double dy_part = field.dim == 2 ? fx[i] * dfy[j] : 0.0;
        for (int m = 0; m < nc; ++m) {
          const double c = grid.node(m);
          const double ch = chi(u, c);
          double term = 0.0;
          if (ch != 0.0) {
            // chi * (psi_t + f'(c) . grad psi)
            double adv = fpc[std::size_t(m) * field.dim] * dx_part;
            if (field.dim == 2) adv += fpc[std::size_t(m) * field.dim + 1] * dy_part;
            term = ch * fc[m] * (sxy * dbt + adv * bt);
          }
          term -= 0.5 * field.eps * sg(u - c) * L * sxy * dfc[m] * bt;
          s += term * wc[m];
        }
      }
    slice_acc[n] = s * cv;
  }
  double acc = 0.0;
  for (int n = 0; n < nt; ++n) acc += slice_acc[n] * wt[n];
  return acc;
}

double defect_pairing_density(const DefectDensity& defect, const KineticBump& psi) {
  const SpaceTimeField& field = *defect.field;
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();
  const CGrid& grid = defect.cgrid;
  const double dc = grid.dc();
  double acc = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    const double tn = field.times[n];
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i) {
        const double px = field.x_center(i), py = field.y_center(j);
        for (int m = 0; m < grid.n; ++m) {
          const double w = (m == 0 || m == grid.n - 1) ? 0.5 : 1.0;
          s += w * defect.at(n, i, j, grid.node(m)) * psi.dc(px, py, grid.node(m), tn);
        }
      }
    acc += s * dc * cv * wt[n];
  }
  return acc;
}

namespace {

// shared loop for the integrated-by-parts pairings: mixed=false pairs m with
// psi itself (Eq. form uses dpsi/dx_j), mixed=true pairs m with dpsi/dc
// (uses the mixed partial d2psi/dx_j dc).
double ibp_pairing(const SpaceTimeField& field, const ProblemSpec& spec, const CGrid& grid,
                   const KineticBump& psi, bool mixed) {
  const auto wt = time_weights(field);
  const double cv = field.cell_volume();
  const double dc = grid.dc();
  double acc = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    const double tn = field.times[n];
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i) {
        const double px = field.x_center(i), py = field.y_center(j);
        const double u = field.at(n, i, j);
        const double Bu = spec.viscosity.B(u);
        for (int a = 0; a < field.dim; ++a) {
          const double gu = grad_component(field, n, i, j, a);
          for (int m = 0; m < grid.n; ++m) {
            const double w = (m == 0 || m == grid.n - 1) ? 0.5 : 1.0;
            const double c = grid.node(m);
            const double dpsi = mixed ? psi.dx_dc(px, py, c, tn, a) : psi.dx(px, py, c, tn, a);
            s += -0.5 * field.eps * w * sg(u - c) * Bu * gu * dpsi;
          }
        }
      }
    acc += s * dc * cv * wt[n];
  }
  return acc;
}

}  // namespace

double defect_pairing_ibp(const SpaceTimeField& field, const ProblemSpec& spec, const CGrid& grid,
                          const KineticBump& psi) {
  return ibp_pairing(field, spec, grid, psi, false);
}

double defect_dc_pairing_ibp(const SpaceTimeField& field, const ProblemSpec& spec,
                             const CGrid& grid, const KineticBump& psi) {
  return ibp_pairing(field, spec, grid, psi, true);
}

MeasureBoundReport measure_bound_check(const SpaceTimeField& field, const ProblemSpec& spec,
                                       const CGrid& grid, const KineticBump& psi,
                                       double sqrt_eps_grad_l2_sum) {
  check_psi_support(field, grid, psi);
  MeasureBoundReport rep;
  rep.pairing = defect_pairing_ibp(field, spec, grid, psi);
  const double A = spec.bound_A();
  const double Bmax = spec.viscosity.max_on(-A, A);
  const double M = 0.5 * (grid.c_hi - grid.c_lo);
  const double T = field.times.back();
  const double vol = field.domain.volume() * 2.0 * M * T;
  rep.bound = std::sqrt(field.eps) * Bmax * std::sqrt(2.0 * M) * sqrt_eps_grad_l2_sum * vol *
              psi.c1_norm();
  rep.pass = std::abs(rep.pairing) <= 1.05 * rep.bound;
  return rep;
}

double nondegeneracy_measure(const FluxModel& flux, double support_lo, double support_hi,
                             int n_dirs, double delta) {
  if (n_dirs < 100) throw std::invalid_argument("nondegeneracy_measure: need n_dirs >= 100");
  const double L = support_hi - support_lo;
  const double dc = std::min(delta / 10.0, L / 2000.0);
  const int nc = int(L / dc) + 1;

  std::vector<double> fp(std::size_t(nc) * flux.dim());
  for (int i = 0; i < nc; ++i)
    for (int a = 0; a < flux.dim(); ++a)
      fp[std::size_t(i) * flux.dim() + a] = flux.df(a, support_lo + i * dc);

  double worst = 0.0;
  if (flux.dim() == 1) {
    for (int k = 0; k < n_dirs; ++k) {
      const double th = M_PI * k / n_dirs;
      const double tau = std::cos(th), xi = std::sin(th);
      long count = 0;
      for (int i = 0; i < nc; ++i)
        if (std::abs(tau + fp[i] * xi) < delta) ++count;
      worst = std::max(worst, count * dc);
    }
  } else {
    const int np = std::max(10, int(std::sqrt(double(n_dirs))));
    for (int a = 0; a < np; ++a) {
      const double phi = M_PI * (a + 0.5) / np;  // polar from the tau axis
      for (int b = 0; b < np; ++b) {
        const double th = M_PI * b / np;
        const double tau = std::cos(phi);
        const double xi1 = std::sin(phi) * std::cos(th), xi2 = std::sin(phi) * std::sin(th);
        long count = 0;
        for (int i = 0; i < nc; ++i)
          if (std::abs(tau + fp[std::size_t(i) * 2] * xi1 + fp[std::size_t(i) * 2 + 1] * xi2) <
              delta)
            ++count;
        worst = std::max(worst, count * dc);
      }
    }
  }
  return worst;
}

}  // namespace viscolimit
