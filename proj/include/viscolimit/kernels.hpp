#pragma once

#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// Inner loops of the viscous update, in OpenMP and plain-serial variants.
// The serial versions are the reference implementation: both compute each
// cell independently (faces are re-evaluated per cell), so the parallel
// variant is bitwise-identical for any thread count.
namespace kernels {

// Local Lax-Friedrichs advective face flux, lambda = max(|f'(a)|,|f'(b)|).
double llf_face_flux(double a, double b, const FluxComponent& f);

// d/dt u_i for the 1-D semidiscretization with Dirichlet-0 ghosts:
//   -(F_{i+1/2}-F_{i-1/2})/h + eps*(G_{i+1/2}-G_{i-1/2})/h,
//   G face = mean(B)*(u_R-u_L)/h.
void rhs_1d_serial(const double* u, int nx, double h, double eps, const FluxModel& flux,
                   const ViscosityModel& visc, double* out);
void rhs_1d_omp(const double* u, int nx, double h, double eps, const FluxModel& flux,
                const ViscosityModel& visc, double* out);

// 2-D version, row-major u[j*nx+i].
void rhs_2d_serial(const double* u, int nx, int ny, double hx, double hy, double eps,
                   const FluxModel& flux, const ViscosityModel& visc, double* out);
void rhs_2d_omp(const double* u, int nx, int ny, double hx, double hy, double eps,
                const FluxModel& flux, const ViscosityModel& visc, double* out);

// Diffusion operator sum_j d_j(B(u) d_j u) with the same face stencil the
// solver uses (kinetic defect density is built from this).
void diffusion_operator_1d(const double* u, int nx, double h, const ViscosityModel& visc,
                           double* out);
void diffusion_operator_2d(const double* u, int nx, int ny, double hx, double hy,
                           const ViscosityModel& visc, double* out);

// axpy convex combination helpers for SSP-RK2 stages
void euler_stage_serial(const double* u, const double* rhs, int n, double dt, double* out);
void euler_stage_omp(const double* u, const double* rhs, int n, double dt, double* out);
void rk2_combine_serial(const double* u, const double* ustar, const double* rhs, int n, double dt,
                        double* out);
void rk2_combine_omp(const double* u, const double* ustar, const double* rhs, int n, double dt,
                     double* out);

}  // namespace kernels
}  // namespace viscolimit
