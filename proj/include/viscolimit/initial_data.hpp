#pragma once

#include <functional>
#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// Smooth approximation u_{0eps} of a bounded datum: zero-extension, inward
// translation by 2*eps near each face blended through a partition of unity,
// then convolution with the unit-mass bump mollifier of radius eps.
//
// The evaluator is exact (quadrature of the convolution); the norms are
// measured on an internal midpoint grid.
struct MollifiedDatum {
  double eps = 0.0;
  SpatialDomain domain;
  std::function<double(double, double)> eval;       // u_{0eps}
  std::function<double(double, double, int)> grad;  // d/dx_axis u_{0eps}
  std::function<double(double, double)> laplacian;

  // measured quantities (midpoint rule on sample_n cells per axis)
  int sample_n = 0;
  double sup_norm = 0.0;
  double l2_norm_sq = 0.0;      // ||u_{0eps}||^2_{L2}
  double l1_dist_to_u0 = 0.0;   // ||u_{0eps} - u0||_{L1}
  double grad_l1 = 0.0;
  double grad_l2_sq = 0.0;
  double lap_l1 = 0.0;
  double total_variation = 0.0;  // discrete TV incl. boundary traces

  double operator()(double x, double y = 0.0) const { return eval(x, y); }
};

MollifiedDatum mollify_dirichlet(const InitialDatum& u0, const SpatialDomain& domain, double eps);

// The four-term bound of the initial-data lemma:
// ||u||_inf + ||grad u||_L1 + eps ||lap u||_L1 + eps ||grad u||^2_L2
struct BoundsReport {
  double sup = 0.0, grad_l1 = 0.0, eps_lap_l1 = 0.0, eps_grad_l2_sq = 0.0;
  double total() const { return sup + grad_l1 + eps_lap_l1 + eps_grad_l2_sq; }
};

BoundsReport verify_initial_bounds(const MollifiedDatum& datum, double eps);

// Normalized bump mollifier profile on (-1,1): rho(t) = C exp(-1/(1-t^2)), integral 1.
double mollifier_rho(double t);
double mollifier_drho(double t);
double mollifier_ddrho(double t);

}  // namespace viscolimit
