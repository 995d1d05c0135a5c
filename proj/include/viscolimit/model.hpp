#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace viscolimit {

// Rectangular domain, d = 1 or 2. Faces carry the outward unit normal.
struct SpatialDomain {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 0.0};

  double length(int axis) const { return hi[axis] - lo[axis]; }
  double volume() const { return dim == 1 ? length(0) : length(0) * length(1); }
  double min_length() const { return dim == 1 ? length(0) : std::min(length(0), length(1)); }
  void validate() const;  // positive volume, dim in {1,2}
};

SpatialDomain make_interval(double a, double b);
SpatialDomain make_rectangle(double a1, double b1, double a2, double b2);

// One flux component: f, f', f''.
struct FluxComponent {
  std::function<double(double)> f, df, ddf;
};

struct FluxModel {
  std::string name;
  std::vector<FluxComponent> comp;  // size d

  int dim() const { return static_cast<int>(comp.size()); }
  double f(int j, double u) const { return comp[j].f(u); }
  double df(int j, double u) const { return comp[j].df(u); }
  double ddf(int j, double u) const { return comp[j].ddf(u); }
};

struct ViscosityModel {
  std::string name;
  std::function<double(double)> B, dB;
  double r = 1.0;  // certified lower bound, B >= r > 0 on the invariant interval

  double max_on(double lo, double hi, int samples = 10000) const;
};

// Initial datum as a bounded sampler on the domain (y ignored for d=1).
struct InitialDatum {
  std::string name;
  std::function<double(double, double)> eval;
  double sup_norm = 0.0;

  double operator()(double x, double y = 0.0) const { return eval(x, y); }
};

// The full viscous IBVP: domain, horizon, epsilon, flux, viscosity, datum.
struct ProblemSpec {
  SpatialDomain domain;
  double horizon = 0.3;  // T
  double eps = 0.1;
  FluxModel flux;
  ViscosityModel viscosity;
  InitialDatum initial;

  double bound_A() const { return initial.sup_norm; }  // invariant interval [-A, A]
  void validate() const;
};

// sup of max_j |f_j'| over [lo,hi], dense uniform sampling (10^4 points).
double lipschitz_bound(const FluxModel& flux, double lo, double hi, int samples = 10000);

enum class Hypothesis { D, E, F };

struct HypothesisClause {
  std::string name;
  bool pass = false;
  double witness = 0.0;  // numerically estimated witness for the clause
  std::string detail;
};

struct HypothesisReport {
  Hypothesis which;
  std::vector<HypothesisClause> clauses;
  bool pass = false;
};

// Sampling-based certificate for Hypothesis D/E/F on the spec's invariant interval.
// E requires d=1, F requires d=2; mismatch throws std::invalid_argument.
HypothesisReport check_hypothesis(const ProblemSpec& spec, Hypothesis which);

// --- catalogs -------------------------------------------------------------

// burgers | linear(a) | cubic | power-mix-2d | polynomial(coeffs)
FluxModel make_flux_burgers();
FluxModel make_flux_linear(double a);
FluxModel make_flux_cubic();
FluxModel make_flux_power_mix_2d();
FluxModel make_flux_polynomial(const std::vector<double>& coeffs);

// unit | constant(b) | two-plus-sin
ViscosityModel make_viscosity_unit();
ViscosityModel make_viscosity_constant(double b);
ViscosityModel make_viscosity_two_plus_sin();

// constant(c) | riemann(uL,uR,x0) | sine(a) | bv-step(x0) | csv samples
InitialDatum make_initial_constant(double c);
InitialDatum make_initial_riemann(double uL, double uR, double x0);
InitialDatum make_initial_sine(const SpatialDomain& dom, double amplitude);
InitialDatum make_initial_bv_step(double x0);
InitialDatum make_initial_csv(const std::string& path, const SpatialDomain& dom);

}  // namespace viscolimit
