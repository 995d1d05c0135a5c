#pragma once

#include <vector>

#include "viscolimit/field.hpp"
#include "viscolimit/initial_data.hpp"
#include "viscolimit/model.hpp"

namespace viscolimit {

// Per-run a-priori estimate monitors, accumulated at full step resolution.
struct EstimateTrace {
  double max_sup = 0.0;
  double eps_grad_sq = 0.0;     // sum_j eps ||d_j u||^2_{L2(Omega_T)}, trapezoid in time
  double eps_grad_sq_axis[2] = {0.0, 0.0};
  double time_deriv_l1 = 0.0;   // ||du/dt||_{L1(Omega_T)}
  std::vector<double> sup_per_slice;           // at stored slices
  std::vector<double> eps_grad_sq_per_slice;   // accumulated value at stored slices
  std::vector<double> time_deriv_l1_per_slice;

  // sum_j sqrt(eps) ||d_j u||_{L2(Omega_T)}
  double sqrt_eps_grad_sum(int dim) const;
};

struct SolverOptions {
  bool use_omp = true;
  int max_stored_slices = 512;
};

// dt = 0.4 * min( h/(d*M), h^2/(2*d*eps*B_max) ), M and B_max sampled on [-A,A].
double stable_dt(const ProblemSpec& spec, double h);

struct ViscousRun {
  SpaceTimeField field;
  EstimateTrace trace;
};

// SSP-RK2 / local Lax-Friedrichs / face-averaged B, Dirichlet-0 ghosts.
// Aborts (throws std::runtime_error) if any |u| exceeds A + 1e-6.
ViscousRun solve_viscous(const ProblemSpec& spec, const MollifiedDatum& datum, int n_x,
                         const SolverOptions& opt = {});

// true iff max |u| <= A + 1e-12
bool check_max_principle(const SpaceTimeField& field, double A);

struct InequalityReport {
  double lhs = 0.0, bound1 = 0.0, bound2 = 0.0, tol = 0.0;
  bool pass = false;
};

// LHS = sum_j eps||d_j u||^2 vs ||u_{0eps}||^2_{L2}/(2r) vs A^2 Vol(Omega)/(2r),
// pass iff LHS <= 1.05*bound1 and bound1 <= bound2.
InequalityReport check_energy_estimate(const EstimateTrace& trace, const MollifiedDatum& datum,
                                       double r);

// Discrete integral int int |u^{n+1}-u^n| over stored slices.
double time_derivative_l1(const SpaceTimeField& field);

}  // namespace viscolimit
