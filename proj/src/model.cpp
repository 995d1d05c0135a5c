#include "viscolimit/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace viscolimit {

void SpatialDomain::validate() const {
  if (dim != 1 && dim != 2) throw std::invalid_argument("domain dimension must be 1 or 2");
  for (int a = 0; a < dim; ++a)
    if (!(hi[a] > lo[a])) throw std::invalid_argument("domain needs positive volume");
}

SpatialDomain make_interval(double a, double b) {
  SpatialDomain d;
  d.dim = 1;
  d.lo = {a, 0.0};
  d.hi = {b, 0.0};
  d.validate();
  return d;
}

SpatialDomain make_rectangle(double a1, double b1, double a2, double b2) {
  SpatialDomain d;
  d.dim = 2;
  d.lo = {a1, a2};
  d.hi = {b1, b2};
  d.validate();
  return d;
}

double ViscosityModel::max_on(double lo, double hi, int samples) const {
  double m = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = lo + (hi - lo) * i / double(samples - 1);
    m = std::max(m, B(z));
  }
  return m;
}

void ProblemSpec::validate() const {
  domain.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon T must be positive");
  if (flux.dim() != domain.dim) throw std::invalid_argument("flux dimension != domain dimension");
  if (bound_A() < 0.0) throw std::invalid_argument("sup norm of initial datum must be >= 0");
}

double lipschitz_bound(const FluxModel& flux, double lo, double hi, int samples) {
  double m = 0.0;
  for (int j = 0; j < flux.dim(); ++j)
    for (int i = 0; i < samples; ++i) {
      const double z = lo + (hi - lo) * i / double(samples - 1);
      m = std::max(m, std::abs(flux.df(j, z)));
    }
  return m;
}

// defined in kinetic.cpp
double nondegeneracy_measure(const FluxModel& flux, double support_lo, double support_hi,
                             int n_dirs, double delta);

namespace {

HypothesisClause clause_f_smooth(const ProblemSpec& spec, double A) {
  // f' matches centered differences of f to O(delta^2) on sampled points.
  HypothesisClause c{"f in C^2, f' consistent with f", false, 0.0, ""};
  const double delta = 1e-5;
  double worst = 0.0;
  for (int j = 0; j < spec.flux.dim(); ++j)
    for (int i = 0; i < 200; ++i) {
      const double z = -A + 2.0 * A * i / 199.0;
      const double fd = (spec.flux.f(j, z + delta) - spec.flux.f(j, z - delta)) / (2 * delta);
      worst = std::max(worst, std::abs(spec.flux.df(j, z) - fd));
    }
  c.witness = worst;
  c.pass = worst <= 1e-6 + 1e-4 * lipschitz_bound(spec.flux, -A - 1, A + 1, 100);
  c.detail = "max |f' - centered difference| over 200 samples";
  return c;
}

HypothesisClause clause_viscosity(const ProblemSpec& spec, double A) {
  HypothesisClause c{"B >= r > 0 and bounded above", false, 0.0, ""};
  double bmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const double z = -A + 2.0 * A * i / 9999.0;
    bmin = std::min(bmin, spec.viscosity.B(z));
  }
  c.witness = bmin;
  c.pass = bmin >= spec.viscosity.r && spec.viscosity.r > 0.0;
  c.detail = "min of B over 10^4 samples vs declared r";
  return c;
}

HypothesisClause clause_datum(const ProblemSpec& spec) {
  HypothesisClause c{"u0 bounded, invariant interval [-A,A]", true, spec.bound_A(),
                     "A = sup |u0|"};
  c.pass = std::isfinite(spec.bound_A());
  return c;
}

}  // namespace

HypothesisReport check_hypothesis(const ProblemSpec& spec, Hypothesis which) {
  spec.validate();
  if (which == Hypothesis::E && spec.domain.dim != 1)
    throw std::invalid_argument("Hypothesis E requires d=1");
  if (which == Hypothesis::F && spec.domain.dim != 2)
    throw std::invalid_argument("Hypothesis F requires d=2");

  const double A = std::max(spec.bound_A(), 1e-12);
  HypothesisReport rep;
  rep.which = which;
  rep.clauses.push_back(clause_f_smooth(spec, A));
  rep.clauses.push_back(clause_viscosity(spec, A));
  rep.clauses.push_back(clause_datum(spec));

  if (which == Hypothesis::D) {
    // nondegeneracy: max over unit (tau,xi) of meas{c : |tau + f'(c).xi| < delta}
    const double delta = 1e-3;
    const double meas = nondegeneracy_measure(spec.flux, -A, A, 720, delta);
    HypothesisClause c{"nondegeneracy of tau + f'(c).xi", false, meas, ""};
    c.pass = meas <= 4.0 * delta;
    c.detail = "max measure of near-degenerate c-set at delta=1e-3";
    rep.clauses.push_back(c);
  } else if (which == Hypothesis::E) {
    // fraction of subintervals of I on which f' is non-constant
    const int nsub = 100, per = 100;
    int nonconst = 0;
    for (int s = 0; s < nsub; ++s) {
      const double a = -A + 2.0 * A * s / nsub, b = -A + 2.0 * A * (s + 1) / nsub;
      double mn = std::numeric_limits<double>::infinity(), mx = -mn;
      for (int i = 0; i < per; ++i) {
        const double v = spec.flux.df(0, a + (b - a) * i / (per - 1));
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      if (mx - mn > 1e-10 * (1.0 + std::abs(mx))) ++nonconst;
    }
    HypothesisClause c{"f' non-constant on every subinterval", false,
                       nonconst / double(nsub), ""};
    c.pass = nonconst == nsub;
    c.detail = "fraction of 100 subintervals with non-constant f'";
    rep.clauses.push_back(c);
  } else {
    // F.3: min over unit xi of max_c |xi1 f1'(c) + xi2 f2'(c)|
    const int ndir = 720, nc = 1000;
    double minmax = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ndir; ++k) {
      const double th = M_PI * k / ndir;
      const double x1 = std::cos(th), x2 = std::sin(th);
      double mx = 0.0;
      for (int i = 0; i < nc; ++i) {
        const double cpt = -A + 2.0 * A * i / (nc - 1);
        mx = std::max(mx, std::abs(x1 * spec.flux.df(0, cpt) + x2 * spec.flux.df(1, cpt)));
      }
      minmax = std::min(minmax, mx);
    }
    HypothesisClause c{"f1', f2' linearly independent", false, minmax, ""};
    c.pass = minmax > 1e-8;
    c.detail = "min over 720 unit directions of max_c |xi . f'(c)| on a 10^3 c-grid";
    rep.clauses.push_back(c);
  }

  rep.pass = true;
  for (const auto& c : rep.clauses) rep.pass = rep.pass && c.pass;
  return rep;
}

// --- catalogs -------------------------------------------------------------

FluxModel make_flux_burgers() {
  FluxModel m;
  m.name = "burgers";
  m.comp.push_back({[](double u) { return 0.5 * u * u; },
                    [](double u) { return u; },
                    [](double) { return 1.0; }});
  return m;
}

FluxModel make_flux_linear(double a) {
  FluxModel m;
  m.name = "linear";
  m.comp.push_back({[a](double u) { return a * u; },
                    [a](double) { return a; },
                    [](double) { return 0.0; }});
  return m;
}

FluxModel make_flux_cubic() {
  FluxModel m;
  m.name = "cubic";
  m.comp.push_back({[](double u) { return u * u * u / 3.0; },
                    [](double u) { return u * u; },
                    [](double u) { return 2.0 * u; }});
  return m;
}

FluxModel make_flux_power_mix_2d() {
  FluxModel m;
  m.name = "power-mix-2d";
  m.comp.push_back({[](double u) { return 0.5 * u * u; },
                    [](double u) { return u; },
                    [](double) { return 1.0; }});
  m.comp.push_back({[](double u) { return u * u * u / 3.0; },
                    [](double u) { return u * u; },
                    [](double u) { return 2.0 * u; }});
  return m;
}

FluxModel make_flux_polynomial(const std::vector<double>& coeffs) {
  FluxModel m;
  m.name = "polynomial";
  auto horner = [](const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
    return v;
  };
  std::vector<double> d1, d2;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d1.push_back(i * coeffs[i]);
  for (std::size_t i = 1; i < d1.size(); ++i) d2.push_back(i * d1[i]);
  m.comp.push_back({[coeffs, horner](double u) { return horner(coeffs, u); },
                    [d1, horner](double u) { return horner(d1, u); },
                    [d2, horner](double u) { return horner(d2, u); }});
  return m;
}

ViscosityModel make_viscosity_unit() { return make_viscosity_constant(1.0); }

ViscosityModel make_viscosity_constant(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("viscosity constant must be positive");
  ViscosityModel v;
  v.name = b == 1.0 ? "unit" : "constant";
  v.B = [b](double) { return b; };
  v.dB = [](double) { return 0.0; };
  v.r = b;
  return v;
}

ViscosityModel make_viscosity_two_plus_sin() {
  ViscosityModel v;
  v.name = "two-plus-sin";
  v.B = [](double u) { return 2.0 + std::sin(u); };
  v.dB = [](double u) { return std::cos(u); };
  v.r = 1.0;
  return v;
}

InitialDatum make_initial_constant(double c) {
  return {"constant", [c](double, double) { return c; }, std::abs(c)};
}

InitialDatum make_initial_riemann(double uL, double uR, double x0) {
  return {"riemann",
          [uL, uR, x0](double x, double) { return x < x0 ? uL : uR; },
          std::max(std::abs(uL), std::abs(uR))};
}

InitialDatum make_initial_sine(const SpatialDomain& dom, double amplitude) {
  const double ax = dom.lo[0], Lx = dom.length(0);
  if (dom.dim == 1)
    return {"sine",
            [=](double x, double) { return amplitude * std::sin(M_PI * (x - ax) / Lx); },
            std::abs(amplitude)};
  const double ay = dom.lo[1], Ly = dom.length(1);
  return {"sine",
          [=](double x, double y) {
            return amplitude * std::sin(M_PI * (x - ax) / Lx) * std::sin(M_PI * (y - ay) / Ly);
          },
          std::abs(amplitude)};
}

InitialDatum make_initial_bv_step(double x0) {
  return {"bv-step",
          [x0](double x, double) { return x < x0 ? -1.0 : 1.0; },
          1.0};
}

InitialDatum make_initial_csv(const std::string& path, const SpatialDomain& dom) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open initial-data CSV: " + path);
  // columns: x[,y],u ; nearest-sample lookup
  struct Row { double x, y, u; };
  auto rows = std::make_shared<std::vector<Row>>();
  std::string line;
  const int want = dom.dim == 1 ? 2 : 3;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0])))
      continue;
    std::stringstream ss(line);
    std::vector<double> v;
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (static_cast<int>(v.size()) != want)
      throw std::runtime_error("initial-data CSV: expected " + std::to_string(want) + " columns");
    rows->push_back(dom.dim == 1 ? Row{v[0], 0.0, v[1]} : Row{v[0], v[1], v[2]});
  }
  if (rows->empty()) throw std::runtime_error("initial-data CSV: no samples");
  double sup = 0.0;
  for (const auto& r : *rows) sup = std::max(sup, std::abs(r.u));
  return {"csv",
          [rows](double x, double y) {
            double best = std::numeric_limits<double>::infinity(), u = 0.0;
            for (const auto& r : *rows) {
              const double d = (r.x - x) * (r.x - x) + (r.y - y) * (r.y - y);
              if (d < best) { best = d; u = r.u; }
            }
            return u;
          },
          sup};
}

}  // namespace viscolimit
