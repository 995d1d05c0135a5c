#include "viscolimit/reference_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace viscolimit {

RiemannSolution RiemannSolution::burgers(double uL, double uR) {
  RiemannSolution s;
  s.uL = uL;
  s.uR = uR;
  if (uL == uR) {
    s.wave = WaveType::Constant;
  } else if (uL > uR) {
    s.wave = WaveType::Shock;
    s.shock_speed = 0.5 * (uL + uR);  // Rankine-Hugoniot for f=u^2/2
  } else {
    s.wave = WaveType::Rarefaction;
    s.fan_lo = uL;
    s.fan_hi = uR;
  }
  return s;
}

double exact_burgers_riemann(double uL, double uR, double x0, double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("exact_burgers_riemann: t must be positive");
  const RiemannSolution s = RiemannSolution::burgers(uL, uR);
  const double xi = (x - x0) / t;
  switch (s.wave) {
    case WaveType::Constant: return uL;
    case WaveType::Shock: return xi < s.shock_speed ? uL : uR;
    case WaveType::Rarefaction:
      if (xi <= s.fan_lo) return uL;
      if (xi >= s.fan_hi) return uR;
      return xi;
  }
  return uL;
}

double exact_burgers_ibvp(const SpatialDomain& dom, double uL, double uR, double x0, double t,
                          double x) {
  if (!(t > 0.0)) throw std::invalid_argument("exact_burgers_ibvp: t must be positive");
  const double a = dom.lo[0], b = dom.hi[0];
  if (uL > uR) {
    if (uR < 0.0) throw std::invalid_argument("exact_burgers_ibvp: shock datum needs uR >= 0");
    const double s = 0.5 * (uL + uR);
    const double t_star = 2.0 * (x0 - a) / (uL - uR);  // fan head meets shock
    if (t > t_star * (1.0 + 1e-12))
      throw std::invalid_argument("exact_burgers_ibvp: past fan-shock interaction time");
    if (x0 + s * t > b)
      throw std::invalid_argument("exact_burgers_ibvp: shock left the domain");
    if (x >= x0 + s * t) return uR;
    // boundary rarefaction emitted at x=a (u=uL is an inadmissible inflow trace)
    return std::min(std::max((x - a) / t, 0.0), uL);
  }
  if (uL < uR) {
    if (uL != 0.0)
      throw std::invalid_argument("exact_burgers_ibvp: rarefaction datum supported for uL = 0");
    if (x0 + uR * t > b)
      throw std::invalid_argument("exact_burgers_ibvp: fan head left the domain");
    return exact_burgers_riemann(uL, uR, x0, t, x);  // all traces admissible
  }
  return uL;
}

namespace {

enum class Shape { Convex, Concave };

Shape flux_shape(const FluxModel& flux, int comp, double lo, double hi, int samples) {
  bool conv = true, conc = true;
  for (int i = 0; i < samples; ++i) {
    const double z = lo + (hi - lo) * i / double(std::max(1, samples - 1));
    const double dd = flux.ddf(comp, z);
    if (dd < -1e-10) conv = false;
    if (dd > 1e-10) conc = false;
  }
  if (conv) return Shape::Convex;
  if (conc) return Shape::Concave;
  throw std::invalid_argument("godunov_flux: flux is neither convex nor concave on the interval");
}

double df_root(const FluxModel& flux, int comp, double lo, double hi) {
  // f' monotone on [lo,hi] with a sign change; bisection
  double a = lo, b = hi;
  double fa = flux.df(comp, a);
  for (int it = 0; it < 80; ++it) {
    const double m = 0.5 * (a + b), fm = flux.df(comp, m);
    if ((fa <= 0.0) == (fm <= 0.0)) { a = m; fa = fm; }
    else b = m;
  }
  return 0.5 * (a + b);
}

}  // namespace

double godunov_flux(double uL, double uR, const FluxModel& flux, int comp) {
  const double lo = std::min(uL, uR), hi = std::max(uL, uR);
  const Shape shape = flux_shape(flux, comp, lo, hi, 33);
  const double fL = flux.f(comp, uL), fR = flux.f(comp, uR);
  if (uL == uR) return fL;
  if (shape == Shape::Convex) {
    if (uL <= uR) {
      // min over [uL,uR]
      if (flux.df(comp, uL) >= 0.0) return fL;
      if (flux.df(comp, uR) <= 0.0) return fR;
      return flux.f(comp, df_root(flux, comp, uL, uR));  // transonic
    }
    return std::max(fL, fR);
  }
  // concave
  if (uL <= uR) return std::min(fL, fR);
  if (flux.df(comp, uR) >= 0.0) return fR;
  if (flux.df(comp, uL) <= 0.0) return fL;
  return flux.f(comp, df_root(flux, comp, uR, uL));
}

SpaceTimeField solve_inviscid(const ProblemSpec& spec, int n_x, int max_stored_slices) {
  spec.validate();
  const int dim = spec.domain.dim;
  const double A = spec.bound_A();
  for (int j = 0; j < dim; ++j) flux_shape(spec.flux, j, -A, A, 10000);  // reject non-convex early

  const double Lx = spec.domain.length(0);
  const int nx = n_x;
  const int ny = dim == 2 ? std::max(16, int(std::lround(n_x * spec.domain.length(1) / Lx))) : 1;
  const double hx = Lx / nx;
  const double hy = dim == 2 ? spec.domain.length(1) / ny : 0.0;
  const double h = dim == 2 ? std::min(hx, hy) : hx;

  const double M = std::max(1e-300, lipschitz_bound(spec.flux, -A, A));
  const double dt0 = 0.4 * h / (dim * M);
  long steps = std::max<long>(1, std::lround(std::ceil(spec.horizon / dt0)));
  int stride = 1;
  while ((steps + stride - 1) / stride + 1 > max_stored_slices) ++stride;
  steps = stride * ((steps + stride - 1) / stride);
  const double dt = spec.horizon / double(steps);
  if (M * dt / h > 1.0) throw std::runtime_error("solve_inviscid: CFL violation");

  const int ncell = nx * ny;
  std::vector<double> u(ncell), unew(ncell);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      u[j * nx + i] = spec.initial(spec.domain.lo[0] + (i + 0.5) * hx,
                                   dim == 2 ? spec.domain.lo[1] + (j + 0.5) * hy : 0.0);

  SpaceTimeField f;
  f.dim = dim;
  f.nx = nx;
  f.ny = ny;
  f.hx = hx;
  f.hy = hy;
  f.dt = stride * dt;
  f.dt_step = dt;
  f.eps = 0.0;
  f.domain = spec.domain;
  f.solver_id = dim == 1 ? "godunov" : "godunov-split-2d(lower-accuracy)";
  f.scheme_id = "godunov+weak-dirichlet0";
  f.times.reserve(steps / stride + 1);
  f.data.reserve((steps / stride + 1) * std::size_t(ncell));

  auto store = [&](long n) {
    f.times.push_back(n * dt);
    f.data.insert(f.data.end(), u.begin(), u.end());
  };
  store(0);

  auto sweep_x = [&](double tau) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const double c = u[j * nx + i];
        const double uW = i > 0 ? u[j * nx + i - 1] : 0.0;
        const double uE = i + 1 < nx ? u[j * nx + i + 1] : 0.0;
        const double Fw = godunov_flux(uW, c, spec.flux, 0);
        const double Fe = godunov_flux(c, uE, spec.flux, 0);
        unew[j * nx + i] = c - tau / hx * (Fe - Fw);
      }
    u.swap(unew);
  };
  auto sweep_y = [&](double tau) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const double c = u[j * nx + i];
        const double uS = j > 0 ? u[(j - 1) * nx + i] : 0.0;
        const double uN = j + 1 < ny ? u[(j + 1) * nx + i] : 0.0;
        const double Fs = godunov_flux(uS, c, spec.flux, 1);
        const double Fn = godunov_flux(c, uN, spec.flux, 1);
        unew[j * nx + i] = c - tau / hy * (Fn - Fs);
      }
    u.swap(unew);
  };

  for (long n = 0; n < steps; ++n) {
    sweep_x(dt);
    if (dim == 2) sweep_y(dt);
    if ((n + 1) % stride == 0) store(n + 1);
  }
  return f;
}

}  // namespace viscolimit
