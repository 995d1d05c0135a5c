#pragma once

#include "viscolimit/field.hpp"
#include "viscolimit/model.hpp"

namespace viscolimit {

enum class WaveType { Shock, Rarefaction, Constant };

// Exact Burgers Riemann building block (free space).
struct RiemannSolution {
  double uL = 0.0, uR = 0.0;
  WaveType wave = WaveType::Constant;
  double shock_speed = 0.0;      // for shocks (Rankine-Hugoniot)
  double fan_lo = 0.0, fan_hi = 0.0;  // characteristic speeds for rarefactions

  static RiemannSolution burgers(double uL, double uR);
};

// u(x,t) for the free-space Burgers Riemann problem centered at x0, t > 0.
double exact_burgers_riemann(double uL, double uR, double x0, double t, double x);

// Exact entropy solution of the homogeneous-Dirichlet Burgers IBVP on (a,b)
// with Riemann datum. For uL > uR >= 0 the inadmissible inflow trace at the
// left face emits a boundary rarefaction: fan from x=a, plateau, shock.
// Valid while the fan head trails the shock (and the shock stays inside).
double exact_burgers_ibvp(const SpatialDomain& dom, double uL, double uR, double x0, double t,
                          double x);

// Exact-Riemann (Godunov) numerical flux; requires f convex or concave on
// [lo,hi] (sampled), otherwise throws std::invalid_argument.
double godunov_flux(double uL, double uR, const FluxModel& flux, int component = 0);

// First-order Godunov with weak Dirichlet boundaries: boundary face fluxes
// come from the Riemann problem against the exterior state 0. For d=2 this
// is per-axis flux differencing (flagged lower accuracy in the manifest).
SpaceTimeField solve_inviscid(const ProblemSpec& spec, int n_x, int max_stored_slices = 512);

}  // namespace viscolimit
