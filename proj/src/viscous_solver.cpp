#include "viscolimit/viscous_solver.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "viscolimit/kernels.hpp"

namespace viscolimit {

double stable_dt(const ProblemSpec& spec, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("stable_dt: h must be positive");
  const double A = spec.bound_A();
  const double M = lipschitz_bound(spec.flux, -A, A);
  const double Bmax = spec.viscosity.max_on(-A, A);
  const int d = spec.domain.dim;
  const double adv = M > 0.0 ? h / (d * M) : std::numeric_limits<double>::infinity();
  const double dif = h * h / (2.0 * d * spec.eps * Bmax);
  return 0.4 * std::min(adv, dif);
}

double EstimateTrace::sqrt_eps_grad_sum(int dim) const {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) s += std::sqrt(std::max(0.0, eps_grad_sq_axis[a]));
  return s;
}

namespace {

// per-axis int |d_a u|^2, centered differences interior, one-sided at the collar
std::array<double, 2> grad_sq_integral(const std::vector<double>& u, int nx, int ny, double hx,
                                       double hy, int dim) {
  std::array<double, 2> s{0.0, 0.0};
  if (dim == 1) {
    for (int i = 0; i < nx; ++i) {
      double g;
      if (i == 0) g = (u[1] - u[0]) / hx;
      else if (i == nx - 1) g = (u[nx - 1] - u[nx - 2]) / hx;
      else g = (u[i + 1] - u[i - 1]) / (2.0 * hx);
      s[0] += g * g * hx;
    }
    return s;
  }
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const auto at = [&](int ii, int jj) { return u[jj * nx + ii]; };
      double gx, gy;
      if (i == 0) gx = (at(1, j) - at(0, j)) / hx;
      else if (i == nx - 1) gx = (at(nx - 1, j) - at(nx - 2, j)) / hx;
      else gx = (at(i + 1, j) - at(i - 1, j)) / (2.0 * hx);
      if (j == 0) gy = (at(i, 1) - at(i, 0)) / hy;
      else if (j == ny - 1) gy = (at(i, ny - 1) - at(i, ny - 2)) / hy;
      else gy = (at(i, j + 1) - at(i, j - 1)) / (2.0 * hy);
      s[0] += gx * gx * hx * hy;
      s[1] += gy * gy * hx * hy;
    }
  return s;
}

}  // namespace

ViscousRun solve_viscous(const ProblemSpec& spec, const MollifiedDatum& datum, int n_x,
                         const SolverOptions& opt) {
  spec.validate();
  if (n_x < 16) throw std::invalid_argument("solve_viscous: N_x must be >= 16");
  if (std::abs(datum.eps - spec.eps) > 1e-12 * (1.0 + spec.eps))
    throw std::invalid_argument("solve_viscous: datum was mollified with a different eps");

  const int dim = spec.domain.dim;
  const double Lx = spec.domain.length(0);
  const int nx = n_x;
  const int ny = dim == 2 ? std::max(16, int(std::lround(n_x * spec.domain.length(1) / Lx))) : 1;
  const double hx = Lx / nx;
  const double hy = dim == 2 ? spec.domain.length(1) / ny : 0.0;
  const double h = dim == 2 ? std::min(hx, hy) : hx;

  const double dt0 = stable_dt(spec, h);
  long steps = std::max<long>(1, std::lround(std::ceil(spec.horizon / dt0)));
  int stride = 1;
  while ((steps + stride - 1) / stride + 1 > opt.max_stored_slices) ++stride;
  steps = stride * ((steps + stride - 1) / stride);  // stored slices divide the run evenly
  const double dt = spec.horizon / double(steps);

  const int ncell = nx * ny;
  std::vector<double> u(ncell), ustar(ncell), rhs(ncell), unew(ncell);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      u[j * nx + i] = datum(spec.domain.lo[0] + (i + 0.5) * hx,
                            dim == 2 ? spec.domain.lo[1] + (j + 0.5) * hy : 0.0);

  SpaceTimeField f;
  f.dim = dim;
  f.nx = nx;
  f.ny = ny;
  f.hx = hx;
  f.hy = hy;
  f.dt = stride * dt;
  f.dt_step = dt;
  f.eps = spec.eps;
  f.domain = spec.domain;
  f.solver_id = "viscous-fv";
  f.scheme_id = "ssprk2+llf+centeredB,dirichlet0-ghost";
  f.times.reserve(steps / stride + 1);
  f.data.reserve((steps / stride + 1) * std::size_t(ncell));

  EstimateTrace tr;
  const double A = spec.bound_A();
  const double cellv = dim == 1 ? hx : hx * hy;

  auto rhs_eval = [&](const double* in, double* out) {
    if (dim == 1) {
      if (opt.use_omp) kernels::rhs_1d_omp(in, nx, hx, spec.eps, spec.flux, spec.viscosity, out);
      else kernels::rhs_1d_serial(in, nx, hx, spec.eps, spec.flux, spec.viscosity, out);
    } else {
      if (opt.use_omp)
        kernels::rhs_2d_omp(in, nx, ny, hx, hy, spec.eps, spec.flux, spec.viscosity, out);
      else
        kernels::rhs_2d_serial(in, nx, ny, hx, hy, spec.eps, spec.flux, spec.viscosity, out);
    }
  };

  auto sup_of = [&](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };

  auto store_slice = [&](long n) {
    f.times.push_back(n * dt);
    f.data.insert(f.data.end(), u.begin(), u.end());
    tr.sup_per_slice.push_back(sup_of(u));
    tr.eps_grad_sq_per_slice.push_back(tr.eps_grad_sq);
    tr.time_deriv_l1_per_slice.push_back(tr.time_deriv_l1);
  };

  std::array<double, 2> grad_prev = grad_sq_integral(u, nx, ny, hx, hy, dim);
  tr.max_sup = sup_of(u);
  store_slice(0);

  for (long n = 0; n < steps; ++n) {
    rhs_eval(u.data(), rhs.data());
    if (opt.use_omp) kernels::euler_stage_omp(u.data(), rhs.data(), ncell, dt, ustar.data());
    else kernels::euler_stage_serial(u.data(), rhs.data(), ncell, dt, ustar.data());
    rhs_eval(ustar.data(), rhs.data());
    if (opt.use_omp)
      kernels::rk2_combine_omp(u.data(), ustar.data(), rhs.data(), ncell, dt, unew.data());
    else
      kernels::rk2_combine_serial(u.data(), ustar.data(), rhs.data(), ncell, dt, unew.data());

    double dl1 = 0.0;
    for (int i = 0; i < ncell; ++i) dl1 += std::abs(unew[i] - u[i]);
    tr.time_deriv_l1 += dl1 * cellv;
    u.swap(unew);

    const double sup = sup_of(u);
    if (sup > A + 1e-6)
      throw std::runtime_error("solve_viscous: stability violation, |u|=" + std::to_string(sup) +
                               " exceeds A=" + std::to_string(A) + " at step " + std::to_string(n + 1));
    tr.max_sup = std::max(tr.max_sup, sup);

    const std::array<double, 2> grad_now = grad_sq_integral(u, nx, ny, hx, hy, dim);
    for (int a = 0; a < dim; ++a)
      tr.eps_grad_sq_axis[a] += spec.eps * 0.5 * (grad_prev[a] + grad_now[a]) * dt;
    tr.eps_grad_sq = tr.eps_grad_sq_axis[0] + tr.eps_grad_sq_axis[1];
    grad_prev = grad_now;

    if ((n + 1) % stride == 0) store_slice(n + 1);
  }

  ViscousRun run;
  run.field = std::move(f);
  run.trace = std::move(tr);
  return run;
}

bool check_max_principle(const SpaceTimeField& field, double A) {
  return field.max_abs() <= A + 1e-12;
}

InequalityReport check_energy_estimate(const EstimateTrace& trace, const MollifiedDatum& datum,
                                       double r) {
  InequalityReport rep;
  rep.lhs = trace.eps_grad_sq;
  rep.bound1 = datum.l2_norm_sq / (2.0 * r);
  rep.bound2 = datum.sup_norm * datum.sup_norm * datum.domain.volume() / (2.0 * r);
  rep.tol = 0.05;  // quadrature slack
  rep.pass = rep.lhs <= 1.05 * rep.bound1 && rep.bound1 <= rep.bound2 * (1.0 + 1e-12);
  return rep;
}

double time_derivative_l1(const SpaceTimeField& field) {
  double s = 0.0;
  for (int n = 0; n + 1 < field.nt(); ++n)
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i)
        s += std::abs(field.at(n + 1, i, j) - field.at(n, i, j)) * field.cell_volume();
  return s;
}

}  // namespace viscolimit
