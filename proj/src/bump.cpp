#include "viscolimit/bump.hpp"

#include <algorithm>
#include <cmath>

namespace viscolimit {

double bump_profile(double y) {
  const double s = 1.0 - y * y;
  return s > 0.0 ? std::exp(1.0 - 1.0 / s) : 0.0;
}

double bump_profile_deriv(double y) {
  const double s = 1.0 - y * y;
  if (s <= 0.0) return 0.0;
  return bump_profile(y) * (-2.0 * y / (s * s));
}

double bump_profile_deriv_sup() {
  static const double sup = [] {
    double m = 0.0;
    for (int i = 0; i <= 200000; ++i)
      m = std::max(m, std::abs(bump_profile_deriv(-1.0 + 2.0 * i / 200000.0)));
    return m;
  }();
  return sup;
}

double SpaceTimeBump::value(double px, double py, double pt) const {
  double v = x.value(px) * t.value(pt);
  if (dim == 2) v *= y.value(py);
  return v;
}

double SpaceTimeBump::dt(double px, double py, double pt) const {
  double v = x.value(px) * t.deriv(pt);
  if (dim == 2) v *= y.value(py);
  return v;
}

double SpaceTimeBump::dx(double px, double py, double pt, int axis) const {
  if (axis == 0) {
    double v = x.deriv(px) * t.value(pt);
    if (dim == 2) v *= y.value(py);
    return v;
  }
  return x.value(px) * y.deriv(py) * t.value(pt);
}

double SpaceTimeBump::c1_norm() const {
  const double ds = bump_profile_deriv_sup();
  double dmax = std::max(ds / x.width, ds / t.width);
  if (dim == 2) dmax = std::max(dmax, ds / y.width);
  return 1.0 + dmax;  // sup|phi| = 1 for tensor products of unit-sup profiles
}

bool SpaceTimeBump::supported_inside(const SpatialDomain& dom, double T) const {
  bool ok = x.lo() > dom.lo[0] && x.hi() < dom.hi[0] && t.lo() > 0.0 && t.hi() < T;
  if (dim == 2) ok = ok && y.lo() > dom.lo[1] && y.hi() < dom.hi[1];
  return ok;
}

bool SpaceTimeBump::time_compact(double T) const { return t.lo() > 0.0 && t.hi() < T; }

double KineticBump::value(double px, double py, double pc, double pt) const {
  double v = x.value(px) * c.value(pc) * t.value(pt);
  if (dim == 2) v *= y.value(py);
  return v;
}

double KineticBump::dt(double px, double py, double pc, double pt) const {
  double v = x.value(px) * c.value(pc) * t.deriv(pt);
  if (dim == 2) v *= y.value(py);
  return v;
}

double KineticBump::dx(double px, double py, double pc, double pt, int axis) const {
  double v = (axis == 0 ? x.deriv(px) : x.value(px)) * c.value(pc) * t.value(pt);
  if (dim == 2) v *= (axis == 1 ? y.deriv(py) : y.value(py));
  else if (axis != 0) v = 0.0;
  return v;
}

double KineticBump::dc(double px, double py, double pc, double pt) const {
  double v = x.value(px) * c.deriv(pc) * t.value(pt);
  if (dim == 2) v *= y.value(py);
  return v;
}

double KineticBump::dx_dc(double px, double py, double pc, double pt, int axis) const {
  double v = (axis == 0 ? x.deriv(px) : x.value(px)) * c.deriv(pc) * t.value(pt);
  if (dim == 2) v *= (axis == 1 ? y.deriv(py) : y.value(py));
  else if (axis != 0) v = 0.0;
  return v;
}

double KineticBump::c1_norm() const {
  const double ds = bump_profile_deriv_sup();
  double dmax = std::max({ds / x.width, ds / c.width, ds / t.width});
  if (dim == 2) dmax = std::max(dmax, ds / y.width);
  return 1.0 + dmax;
}

namespace {

BumpAxis random_axis(std::mt19937_64& rng, double lo, double hi, double wmin_frac,
                     double wmax_frac) {
  const double L = hi - lo;
  std::uniform_real_distribution<double> wd(wmin_frac * L, wmax_frac * L);
  const double w = wd(rng);
  std::uniform_real_distribution<double> cd(lo + 1.02 * w, hi - 1.02 * w);
  return {cd(rng), w};
}

}  // namespace

std::vector<SpaceTimeBump> make_bump_family(const SpatialDomain& dom, double T, int count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SpaceTimeBump> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SpaceTimeBump b;
    b.dim = dom.dim;
    b.x = random_axis(rng, dom.lo[0], dom.hi[0], 0.10, 0.22);
    if (dom.dim == 2) b.y = random_axis(rng, dom.lo[1], dom.hi[1], 0.10, 0.22);
    b.t = random_axis(rng, 0.0, T, 0.12, 0.25);
    out.push_back(b);
  }
  return out;
}

std::vector<SpaceTimeBump> make_boundary_bump_family(const SpatialDomain& dom, double T, int count,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<SpaceTimeBump> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SpaceTimeBump b;
    b.dim = dom.dim;
    // wide spatial support, may reach past the faces
    const double Lx = dom.length(0);
    std::uniform_real_distribution<double> wx(0.3 * Lx, 0.6 * Lx);
    std::uniform_real_distribution<double> cx(dom.lo[0], dom.hi[0]);
    b.x = {cx(rng), wx(rng)};
    if (dom.dim == 2) {
      const double Ly = dom.length(1);
      std::uniform_real_distribution<double> wy(0.3 * Ly, 0.6 * Ly);
      std::uniform_real_distribution<double> cy(dom.lo[1], dom.hi[1]);
      b.y = {cy(rng), wy(rng)};
    }
    b.t = random_axis(rng, 0.0, T, 0.12, 0.25);
    out.push_back(b);
  }
  return out;
}

std::vector<KineticBump> make_kinetic_bump_family(const SpatialDomain& dom, double c_lo,
                                                  double c_hi, double T, int count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
  std::vector<KineticBump> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    KineticBump b;
    b.dim = dom.dim;
    b.x = random_axis(rng, dom.lo[0], dom.hi[0], 0.10, 0.22);
    if (dom.dim == 2) b.y = random_axis(rng, dom.lo[1], dom.hi[1], 0.10, 0.22);
    b.c = random_axis(rng, c_lo, c_hi, 0.15, 0.30);
    b.t = random_axis(rng, 0.0, T, 0.12, 0.25);
    out.push_back(b);
  }
  return out;
}

}  // namespace viscolimit
