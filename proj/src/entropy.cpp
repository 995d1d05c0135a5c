#include "viscolimit/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "viscolimit/quadrature.hpp"

namespace viscolimit {

double interval_dist(double z, double a, double b) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  if (z < lo) return lo - z;
  if (z > hi) return z - hi;
  return 0.0;
}

double KruzhkovPair::eta(double u) const { return std::abs(u - k); }

double KruzhkovPair::q(double u, const FluxModel& flux, int j) const {
  return sg(u - k) * (flux.f(j, u) - flux.f(j, k));
}

std::vector<double> kruzhkov_flux(double u, double k, const FluxModel& flux) {
  std::vector<double> out(flux.dim());
  for (int j = 0; j < flux.dim(); ++j)
    out[j] = sg(u - k) * (flux.f(j, u) - flux.f(j, k));
  return out;
}

double SmoothEntropyPair::eta(double z) const {
  const double s = 1.0 / l;
  return std::sqrt((z - k) * (z - k) + s * s) - s;
}

double SmoothEntropyPair::eta_p(double z) const {
  const double s = 1.0 / l;
  return (z - k) / std::sqrt((z - k) * (z - k) + s * s);
}

double SmoothEntropyPair::eta_pp(double z) const {
  const double s = 1.0 / l;
  const double d2 = (z - k) * (z - k) + s * s;
  return s * s / (d2 * std::sqrt(d2));
}

double SmoothEntropyPair::q(double z, const FluxModel& flux, int j, double tol) const {
  return integrate([&](double r) { return eta_p(r) * flux.df(j, r); }, k, z, tol);
}

double SmoothEntropyPair::eta_pp_sup(double lo, double hi) const {
  double m = 0.0;
  for (int i = 0; i < 10000; ++i) m = std::max(m, eta_pp(lo + (hi - lo) * i / 9999.0));
  // eta'' peaks at z=k with value l
  if (lo <= k && k <= hi) m = std::max(m, eta_pp(k));
  return m;
}

double BoundaryEntropyPair::H(double z) const {
  const double s = 1.0 / l;
  const double d = interval_dist(z, w, k);
  return std::sqrt(d * d + s * s) - s;
}

double BoundaryEntropyPair::dH1(double z) const {
  const double s = 1.0 / l;
  const double lo = std::min(w, k), hi = std::max(w, k);
  if (z >= lo && z <= hi) return 0.0;
  const double d = interval_dist(z, w, k);
  const double sgn = z > hi ? 1.0 : -1.0;
  return sgn * d / std::sqrt(d * d + s * s);
}

std::vector<double> BoundaryEntropyPair::Q(double z, const FluxModel& flux, double tol) const {
  std::vector<double> out(flux.dim());
  for (int j = 0; j < flux.dim(); ++j)
    out[j] = integrate([&](double r) { return dH1(r) * flux.df(j, r); }, w, z, tol);
  return out;
}

BoundaryPairValue eval_boundary_pair(const BoundaryEntropyPair& pair, double z,
                                     const FluxModel& flux, double tol) {
  return {pair.H(z), pair.Q(z, flux, tol)};
}

std::vector<double> eval_limit_flux(double z, double w, double k, const FluxModel& flux) {
  const double lo = std::min(w, k), hi = std::max(w, k);
  std::vector<double> out(flux.dim(), 0.0);
  for (int j = 0; j < flux.dim(); ++j) {
    if (z >= hi) out[j] = flux.f(j, z) - flux.f(j, hi);
    else if (z <= lo) out[j] = flux.f(j, lo) - flux.f(j, z);
    else out[j] = 0.0;
  }
  return out;
}

}  // namespace viscolimit
