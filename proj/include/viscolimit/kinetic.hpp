#pragma once

#include <vector>

#include "viscolimit/bump.hpp"
#include "viscolimit/field.hpp"
#include "viscolimit/model.hpp"

namespace viscolimit {

// Uniform c-grid on [-M, M] (the paper's Omega_MT velocity window).
struct CGrid {
  double c_lo = -1.2, c_hi = 1.2;
  int n = 256;
  double dc() const { return (c_hi - c_lo) / (n - 1); }
  double node(int i) const { return c_lo + i * dc(); }
};

CGrid default_cgrid(double A, int n = 256);  // half-width 1.2*A

// chi_u(c): 1 if u < c < 0, -1 if 0 < c < u, 0 otherwise.
double chi(double u, double c);

// Trapezoid of chi_u over the grid; contract |result + u| <= 2*dc.
// Throws if the grid does not cover I[0,u].
double chi_integral_identity(double u, const CGrid& grid);

// Defect density m(x,t;c) = (eps/2) sg(u-c) * sum_j d_j(B(u) d_j u), with the
// diffusion operator on the solver's face stencil (cached per space-time cell).
struct DefectDensity {
  const SpaceTimeField* field = nullptr;
  double eps = 0.0;
  CGrid cgrid;
  std::vector<double> diffusion;  // nt*ny*nx values of sum_j d_j(B d_j u)

  static DefectDensity build(const SpaceTimeField& field, const ProblemSpec& spec,
                             const CGrid& grid);
  double at(int n, int i, int j, double c) const;
  double total_abs() const;  // int int int |m|
};

// Weak residual of the kinetic equation against psi (compact in x, c, t):
//   int [ chi dpsi/dt + sum_j f_j'(c) chi dpsi/dx_j - m dpsi/dc ].
double kinetic_weak_residual(const SpaceTimeField& field, const ProblemSpec& spec,
                             const CGrid& grid, const KineticBump& psi);

struct MeasureBoundReport {
  double pairing = 0.0;  // <m, psi> via the integrated-by-parts identity
  double bound = 0.0;    // sqrt(eps)||B|| sqrt(2M) (sum_j sqrt(eps)||d_j u||) Vol(Omega_MT) ||psi||_C1
  bool pass = false;
};

MeasureBoundReport measure_bound_check(const SpaceTimeField& field, const ProblemSpec& spec,
                                       const CGrid& grid, const KineticBump& psi,
                                       double sqrt_eps_grad_l2_sum);

// <m, dpsi/dc> by direct density quadrature (dual route for the consistency test).
double defect_pairing_density(const DefectDensity& defect, const KineticBump& psi);
// <m, psi> via the integrated-by-parts identity (feeds the measure bound).
double defect_pairing_ibp(const SpaceTimeField& field, const ProblemSpec& spec, const CGrid& grid,
                          const KineticBump& psi);
// <m, dpsi/dc> via integration by parts (second route of the consistency test).
double defect_dc_pairing_ibp(const SpaceTimeField& field, const ProblemSpec& spec,
                             const CGrid& grid, const KineticBump& psi);

// max over sampled unit (tau,xi) of meas{ c in [lo,hi] : |tau + f'(c).xi| < delta }.
double nondegeneracy_measure(const FluxModel& flux, double support_lo, double support_hi,
                             int n_dirs, double delta);

}  // namespace viscolimit
