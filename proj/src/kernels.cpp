#include "viscolimit/kernels.hpp"

#include <cmath>

namespace viscolimit {
namespace kernels {

double llf_face_flux(double a, double b, const FluxComponent& f) {
  const double lam = std::max(std::abs(f.df(a)), std::abs(f.df(b)));
  return 0.5 * (f.f(a) + f.f(b)) - 0.5 * lam * (b - a);
}

namespace {

inline double cell_rhs_1d(const double* u, int nx, int i, double h, double eps,
                          const FluxComponent& f, const ViscosityModel& visc) {
  const double uL = i > 0 ? u[i - 1] : 0.0;
  const double uR = i + 1 < nx ? u[i + 1] : 0.0;
  const double Fm = llf_face_flux(uL, u[i], f);
  const double Fp = llf_face_flux(u[i], uR, f);
  const double Bm = 0.5 * (visc.B(uL) + visc.B(u[i]));
  const double Bp = 0.5 * (visc.B(u[i]) + visc.B(uR));
  const double Gm = Bm * (u[i] - uL) / h;
  const double Gp = Bp * (uR - u[i]) / h;
  return -(Fp - Fm) / h + eps * (Gp - Gm) / h;
}

inline double cell_rhs_2d(const double* u, int nx, int ny, int i, int j, double hx, double hy,
                          double eps, const FluxModel& flux, const ViscosityModel& visc) {
  const double c = u[j * nx + i];
  const double uW = i > 0 ? u[j * nx + i - 1] : 0.0;
  const double uE = i + 1 < nx ? u[j * nx + i + 1] : 0.0;
  const double uS = j > 0 ? u[(j - 1) * nx + i] : 0.0;
  const double uN = j + 1 < ny ? u[(j + 1) * nx + i] : 0.0;
  const double Fw = llf_face_flux(uW, c, flux.comp[0]);
  const double Fe = llf_face_flux(c, uE, flux.comp[0]);
  const double Fs = llf_face_flux(uS, c, flux.comp[1]);
  const double Fn = llf_face_flux(c, uN, flux.comp[1]);
  const double Bc = visc.B(c);
  const double Gw = 0.5 * (visc.B(uW) + Bc) * (c - uW) / hx;
  const double Ge = 0.5 * (Bc + visc.B(uE)) * (uE - c) / hx;
  const double Gs = 0.5 * (visc.B(uS) + Bc) * (c - uS) / hy;
  const double Gn = 0.5 * (Bc + visc.B(uN)) * (uN - c) / hy;
  return -(Fe - Fw) / hx - (Fn - Fs) / hy + eps * ((Ge - Gw) / hx + (Gn - Gs) / hy);
}

}  // namespace

void rhs_1d_serial(const double* u, int nx, double h, double eps, const FluxModel& flux,
                   const ViscosityModel& visc, double* out) {
  for (int i = 0; i < nx; ++i) out[i] = cell_rhs_1d(u, nx, i, h, eps, flux.comp[0], visc);
}

void rhs_1d_omp(const double* u, int nx, double h, double eps, const FluxModel& flux,
                const ViscosityModel& visc, double* out) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nx; ++i) out[i] = cell_rhs_1d(u, nx, i, h, eps, flux.comp[0], visc);
}

void rhs_2d_serial(const double* u, int nx, int ny, double hx, double hy, double eps,
                   const FluxModel& flux, const ViscosityModel& visc, double* out) {
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      out[j * nx + i] = cell_rhs_2d(u, nx, ny, i, j, hx, hy, eps, flux, visc);
}

void rhs_2d_omp(const double* u, int nx, int ny, double hx, double hy, double eps,
                const FluxModel& flux, const ViscosityModel& visc, double* out) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      out[j * nx + i] = cell_rhs_2d(u, nx, ny, i, j, hx, hy, eps, flux, visc);
}

void diffusion_operator_1d(const double* u, int nx, double h, const ViscosityModel& visc,
                           double* out) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nx; ++i) {
    const double uL = i > 0 ? u[i - 1] : 0.0;
    const double uR = i + 1 < nx ? u[i + 1] : 0.0;
    const double Gm = 0.5 * (visc.B(uL) + visc.B(u[i])) * (u[i] - uL) / h;
    const double Gp = 0.5 * (visc.B(u[i]) + visc.B(uR)) * (uR - u[i]) / h;
    out[i] = (Gp - Gm) / h;
  }
}

void diffusion_operator_2d(const double* u, int nx, int ny, double hx, double hy,
                           const ViscosityModel& visc, double* out) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double c = u[j * nx + i];
      const double uW = i > 0 ? u[j * nx + i - 1] : 0.0;
      const double uE = i + 1 < nx ? u[j * nx + i + 1] : 0.0;
      const double uS = j > 0 ? u[(j - 1) * nx + i] : 0.0;
      const double uN = j + 1 < ny ? u[(j + 1) * nx + i] : 0.0;
      const double Bc = visc.B(c);
      const double Gw = 0.5 * (visc.B(uW) + Bc) * (c - uW) / hx;
      const double Ge = 0.5 * (Bc + visc.B(uE)) * (uE - c) / hx;
      const double Gs = 0.5 * (visc.B(uS) + Bc) * (c - uS) / hy;
      const double Gn = 0.5 * (Bc + visc.B(uN)) * (uN - c) / hy;
      out[j * nx + i] = (Ge - Gw) / hx + (Gn - Gs) / hy;
    }
}

void euler_stage_serial(const double* u, const double* rhs, int n, double dt, double* out) {
  for (int i = 0; i < n; ++i) out[i] = u[i] + dt * rhs[i];
}

void euler_stage_omp(const double* u, const double* rhs, int n, double dt, double* out) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = u[i] + dt * rhs[i];
}

void rk2_combine_serial(const double* u, const double* ustar, const double* rhs, int n, double dt,
                        double* out) {
  for (int i = 0; i < n; ++i) out[i] = 0.5 * u[i] + 0.5 * (ustar[i] + dt * rhs[i]);
}

void rk2_combine_omp(const double* u, const double* ustar, const double* rhs, int n, double dt,
                     double* out) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = 0.5 * u[i] + 0.5 * (ustar[i] + dt * rhs[i]);
}

}  // namespace kernels
}  // namespace viscolimit
