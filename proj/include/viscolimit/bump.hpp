#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// Smooth compactly supported profile on (-1,1) with sup = 1:
//   p(y) = exp(1 - 1/(1-y^2)).
double bump_profile(double y);
double bump_profile_deriv(double y);
double bump_profile_deriv_sup();  // sup |p'|, scanned once

struct BumpAxis {
  double center = 0.0, width = 1.0;
  double value(double s) const { return bump_profile((s - center) / width); }
  double deriv(double s) const { return bump_profile_deriv((s - center) / width) / width; }
  double lo() const { return center - width; }
  double hi() const { return center + width; }
};

// Tensor mollifier bump over (x[,y],t): phi >= 0, analytic partials.
struct SpaceTimeBump {
  int dim = 1;  // spatial dimension
  BumpAxis x, y, t;

  double value(double px, double py, double pt) const;
  double dt(double px, double py, double pt) const;
  double dx(double px, double py, double pt, int axis) const;
  // sup|phi| + max over axes sup|partial|
  double c1_norm() const;
  bool supported_inside(const SpatialDomain& dom, double T) const;
  bool time_compact(double T) const;
};

// Tensor bump over (x[,y],c,t) for kinetic tests.
struct KineticBump {
  int dim = 1;
  BumpAxis x, y, c, t;

  double value(double px, double py, double pc, double pt) const;
  double dt(double px, double py, double pc, double pt) const;
  double dx(double px, double py, double pc, double pt, int axis) const;
  double dc(double px, double py, double pc, double pt) const;
  double dx_dc(double px, double py, double pc, double pt, int axis) const;  // mixed partial
  double c1_norm() const;
};

// Seeded families with randomized centers/widths, supports strictly inside.
std::vector<SpaceTimeBump> make_bump_family(const SpatialDomain& dom, double T, int count,
                                            std::uint64_t seed);
// compact in time, spatial support may overlap the boundary faces
std::vector<SpaceTimeBump> make_boundary_bump_family(const SpatialDomain& dom, double T, int count,
                                                     std::uint64_t seed);
std::vector<KineticBump> make_kinetic_bump_family(const SpatialDomain& dom, double c_lo,
                                                  double c_hi, double T, int count,
                                                  std::uint64_t seed);

}  // namespace viscolimit
