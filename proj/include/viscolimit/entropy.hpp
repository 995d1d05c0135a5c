#pragma once

#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// sg(s): three-branch sign, sg(0) = 0.
inline double sg(double s) { return s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0); }

// distance from z to the closed interval I[a,b] = [min(a,b), max(a,b)]
double interval_dist(double z, double a, double b);

// Kruzhkov pair at k: eta(u)=|u-k|, q_j(u)=sg(u-k)(f_j(u)-f_j(k)).
struct KruzhkovPair {
  double k = 0.0;
  double eta(double u) const;
  double q(double u, const FluxModel& flux, int j) const;
};

std::vector<double> kruzhkov_flux(double u, double k, const FluxModel& flux);

// eta_l(z) = ((z-k)^2 + 1/l^2)^(1/2) - 1/l, q_l = int_k^z eta_l' f'.
struct SmoothEntropyPair {
  double k = 0.0;
  double l = 1.0;
  double eta(double z) const;
  double eta_p(double z) const;
  double eta_pp(double z) const;
  double q(double z, const FluxModel& flux, int j, double tol = 1e-9) const;
  double eta_pp_sup(double lo, double hi) const;  // sampled sup of eta''
};

// H_l(z,w) = ((dist(z,I(w,k)))^2 + 1/l^2)^(1/2) - 1/l,
// Q_l(z,w) = int_w^z d1H_l(r,w) f'(r) dr  (adaptive Simpson).
struct BoundaryEntropyPair {
  double k = 0.0;
  double w = 0.0;
  double l = 1.0;
  double H(double z) const;
  double dH1(double z) const;
  std::vector<double> Q(double z, const FluxModel& flux, double tol = 1e-9) const;
};

struct BoundaryPairValue {
  double H = 0.0;
  std::vector<double> Q;
};
BoundaryPairValue eval_boundary_pair(const BoundaryEntropyPair& pair, double z,
                                     const FluxModel& flux, double tol = 1e-9);

// The uniform limit of Q_l: continuous extension of the case table,
//   z >= max(w,k): f(z) - f(max),  z <= min(w,k): f(min) - f(z),  else 0.
std::vector<double> eval_limit_flux(double z, double w, double k, const FluxModel& flux);

}  // namespace viscolimit
