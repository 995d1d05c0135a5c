#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "viscolimit/bump.hpp"
#include "viscolimit/entropy.hpp"
#include "viscolimit/field.hpp"

namespace viscolimit {

// Quadrature of int int ( eta(u;k) dphi/dt + sum_j q_j(u;k) dphi/dx_j ),
// Kruzhkov pair at k, midpoint in space, trapezoid over stored slices.
// Throws if phi is not compactly supported inside Omega_T.
double interior_entropy_residual(const SpaceTimeField& field, double k, const FluxModel& flux,
                                 const SpaceTimeBump& phi);

// min over the (k, phi) grid; phi values are precomputed once per bump.
double interior_residual_min(const SpaceTimeField& field, const FluxModel& flux,
                             const std::vector<double>& kgrid,
                             const std::vector<SpaceTimeBump>& bumps);

// 9 uniform values in [-A,A] plus k=0.
std::vector<double> make_kgrid(double A);

// Per-face nonnegative boundary weight (index: 0 left,1 right[,2 bottom,3 top]).
struct BoundaryWeight {
  std::vector<double> face;  // size 2*dim
};

struct LimitEstimate {
  double estimate = 0.0;
  std::vector<double> offsets, g;  // g(h_k): time-and-boundary quadrature at depth h_k
};

// g(h) = int_0^T sum_faces Q(u(r+h*inward), w=0) . nu(r) beta(r) dr, the
// essential limit estimated by shrinking-window averages of the g samples.
LimitEstimate boundary_flux_limit(const SpaceTimeField& field, const BoundaryEntropyPair& pair,
                                  const FluxModel& flux, const BoundaryWeight& beta,
                                  std::vector<double> offsets);

std::vector<double> default_boundary_offsets(const SpaceTimeField& field, int count = 8);

struct DecaySequence {
  std::vector<double> times, distances;  // times given in decreasing order toward 0
  bool decreasing = false;
  double final_distance = 0.0;
};

// L1 distances ||u(.,t_j) - u0||; pass criteria applied by the caller.
DecaySequence initial_trace_check(const SpaceTimeField& field,
                                  const std::function<double(double, double)>& u0,
                                  const std::vector<double>& times);

struct BoundaryInequalityReport {
  double lhs = 0.0, rhs = 0.0, tol = 0.0;
  bool pass = false;
};

// -int int (H dphi/dt + sum Q_j dphi/dx_j) <= M d int_Gamma H(u,k) phi + tol;
// the boundary trace of u is one-sided linear extrapolation from the two
// innermost cells. phi must be compact in time.
BoundaryInequalityReport boundary_inequality_check(const SpaceTimeField& field,
                                                   const BoundaryEntropyPair& pair,
                                                   const FluxModel& flux,
                                                   const SpaceTimeBump& phi, double M, double tol);

// Shrinking-window essential-limit estimator used by boundary_flux_limit:
// rectangle+trapezoid average of (offset, value) samples over the smallest
// window containing the first `use` samples.
double window_average_limit(const std::vector<double>& offsets, const std::vector<double>& values,
                            int use = 4);

}  // namespace viscolimit
