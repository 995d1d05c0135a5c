#include "viscolimit/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "viscolimit/compactness.hpp"
#include "viscolimit/initial_data.hpp"
#include "viscolimit/kinetic.hpp"
#include "viscolimit/otto.hpp"
#include "viscolimit/reference_solver.hpp"

namespace viscolimit {

namespace {

std::vector<double> time_weights(const SpaceTimeField& f) {
  std::vector<double> w(f.nt(), 0.0);
  for (int n = 0; n + 1 < f.nt(); ++n) {
    const double dt = f.times[n + 1] - f.times[n];
    w[n] += 0.5 * dt;
    w[n + 1] += 0.5 * dt;
  }
  return w;
}

// nearest-cell evaluation of a field at (x[,y]) in slice n
double field_value_at(const SpaceTimeField& f, int n, double x, double y) {
  int i = int(std::floor((x - f.domain.lo[0]) / f.hx));
  i = std::max(0, std::min(f.nx - 1, i));
  int j = 0;
  if (f.dim == 2) {
    j = int(std::floor((y - f.domain.lo[1]) / f.hy));
    j = std::max(0, std::min(f.ny - 1, j));
  }
  return f.at(n, i, j);
}

int nearest_slice(const SpaceTimeField& f, double t) {
  int best = 0;
  for (int n = 1; n < f.nt(); ++n)
    if (std::abs(f.times[n] - t) < std::abs(f.times[best] - t)) best = n;
  return best;
}

double l1_between(const SpaceTimeField& a, int na, const SpaceTimeField& b, int nb) {
  double s = 0.0;
  for (int j = 0; j < a.ny; ++j)
    for (int i = 0; i < a.nx; ++i)
      s += std::abs(a.at(na, i, j) - field_value_at(b, nb, a.x_center(i), a.y_center(j))) *
           a.cell_volume();
  return s;
}

double max_spatial_tv(const SpaceTimeField& f) {
  double tvmax = 0.0;
  for (int n = 0; n < f.nt(); ++n) {
    double tv = 0.0;
    for (int j = 0; j < f.ny; ++j) {
      tv += std::abs(f.at(n, 0, j));
      for (int i = 0; i + 1 < f.nx; ++i) tv += std::abs(f.at(n, i + 1, j) - f.at(n, i, j));
      tv += std::abs(f.at(n, f.nx - 1, j));
    }
    if (f.dim == 2) {
      for (int i = 0; i < f.nx; ++i) {
        tv += std::abs(f.at(n, i, 0));
        for (int j = 0; j + 1 < f.ny; ++j) tv += std::abs(f.at(n, i, j + 1) - f.at(n, i, j));
        tv += std::abs(f.at(n, i, f.ny - 1));
      }
      tv /= std::max(f.nx, f.ny);  // per-row average in 2-D
    }
    tvmax = std::max(tvmax, tv);
  }
  return tvmax;
}

std::array<double, 2> field_grad_l2_sq(const SpaceTimeField& f) {
  const auto wt = time_weights(f);
  std::array<double, 2> out{0.0, 0.0};
  for (int n = 0; n < f.nt(); ++n) {
    double sx = 0.0, sy = 0.0;
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i) {
        double gx;
        if (i == 0) gx = (f.at(n, 1, j) - f.at(n, 0, j)) / f.hx;
        else if (i == f.nx - 1) gx = (f.at(n, f.nx - 1, j) - f.at(n, f.nx - 2, j)) / f.hx;
        else gx = (f.at(n, i + 1, j) - f.at(n, i - 1, j)) / (2.0 * f.hx);
        sx += gx * gx;
        if (f.dim == 2) {
          double gy;
          if (j == 0) gy = (f.at(n, i, 1) - f.at(n, i, 0)) / f.hy;
          else if (j == f.ny - 1) gy = (f.at(n, i, f.ny - 1) - f.at(n, i, f.ny - 2)) / f.hy;
          else gy = (f.at(n, i, j + 1) - f.at(n, i, j - 1)) / (2.0 * f.hy);
          sy += gy * gy;
        }
      }
    out[0] += sx * f.cell_volume() * wt[n];
    out[1] += sy * f.cell_volume() * wt[n];
  }
  return out;
}

std::vector<double> trace_check_times(const SpaceTimeField& f) {
  const int s = std::max(1, (f.nt() - 1) / 32);
  std::vector<double> ts;
  for (int m : {8, 4, 2, 1}) {
    const int idx = std::min(f.nt() - 1, m * s);
    ts.push_back(f.times[idx]);
  }
  return ts;
}

// All verifications that need only the field (plus spec/config); fills `row`.
void verify_into_row(const SpaceTimeField& field, const ProblemSpec& spec,
                     const SweepConfig& cfg, double sqrt_eps_grad_sum, SweepRow& row) {
  const double A = spec.bound_A();
  const double hplus = row.h + row.eps;

  row.max_principle = check_max_principle(field, A);

  if (cfg.checks.otto) {
    const auto bumps = make_bump_family(spec.domain, spec.horizon, cfg.bump_count, cfg.bump_seed);
    double c1max = 0.0;
    for (const auto& b : bumps) c1max = std::max(c1max, b.c1_norm());
    const double tv = std::max(1.0, max_spatial_tv(field));
    row.entropy_min_residual =
        interior_residual_min(field, spec.flux, make_kgrid(A), bumps);
    row.entropy_tol = cfg.tol.c_interior * hplus * c1max * tv;

    BoundaryEntropyPair pair{0.0, 0.0, 100.0};
    BoundaryWeight beta;
    beta.face.assign(2 * spec.domain.dim, 1.0);
    const auto est =
        boundary_flux_limit(field, pair, spec.flux, beta, default_boundary_offsets(field));
    row.boundary_limit = est.estimate;
    row.boundary_tol = cfg.tol.c_boundary * hplus;

    const auto seq = initial_trace_check(
        field, [&](double x, double y) { return spec.initial(x, y); }, trace_check_times(field));
    row.trace_final = seq.final_distance;
    row.trace_decreasing = seq.decreasing;
    row.trace_tol = cfg.tol.c_init_trace * hplus;
  }

  if (cfg.checks.kinetic) {
    const CGrid grid = default_cgrid(A);
    const auto psis = make_kinetic_bump_family(spec.domain, grid.c_lo, grid.c_hi, spec.horizon,
                                               cfg.kinetic_bump_count, cfg.bump_seed);
    double rmax = 0.0;
    bool mpass = true;
    for (const auto& psi : psis) {
      rmax = std::max(rmax, std::abs(kinetic_weak_residual(field, spec, grid, psi)));
      const auto mb = measure_bound_check(field, spec, grid, psi, sqrt_eps_grad_sum);
      mpass = mpass && mb.pass;
    }
    row.kinetic_residual = rmax;
    row.measure_bound_pass = mpass;
  }

  if (cfg.checks.compactness) {
    if (spec.domain.dim == 1)
      row.defect = tartar_commutation_defect(field, spec.flux, 0.0, 8);
    // d=2 defect is a sweep-level quantity (common grid); filled by run_sweep
  }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
#ifdef _OPENMP
  if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
#endif

  SweepReport rep;
  rep.config = cfg;

  ProblemSpec base;
  base.domain = cfg.domain;
  base.horizon = cfg.T;
  base.flux = cfg.flux;
  base.viscosity = cfg.viscosity;
  base.initial = cfg.initial;

  // inviscid reference on the finest grid
  ProblemSpec refspec = base;
  refspec.eps = cfg.eps_list.front();
  const SpaceTimeField ref = solve_inviscid(refspec, cfg.n_finest);

  const double eps_min = cfg.eps_list.back();
  std::vector<const SpaceTimeField*> sweep_fields;
  std::vector<SpaceTimeField> kept_fields;
  kept_fields.reserve(cfg.eps_list.size());

  for (double eps : cfg.eps_list) {
    ProblemSpec spec = base;
    spec.eps = eps;
    const int n = cfg.couple_h_to_eps
                      ? std::max(16, int(std::lround(cfg.n_finest * eps_min / eps)))
                      : cfg.n_finest;
    const MollifiedDatum datum = mollify_dirichlet(cfg.initial, cfg.domain, eps);
    ViscousRun run = solve_viscous(spec, datum, n);

    SweepRow row;
    row.eps = eps;
    row.h = run.field.hx;
    row.dt = run.field.dt_step;
    row.time_deriv_l1 = run.trace.time_deriv_l1;

    // distances to the Godunov reference
    row.L1_T = l1_between(run.field, run.field.nt() - 1, ref, ref.nt() - 1);
    const auto wt = time_weights(run.field);
    double st = 0.0;
    for (int m = 0; m < run.field.nt(); ++m)
      st += wt[m] * l1_between(run.field, m, ref, nearest_slice(ref, run.field.times[m]));
    row.L1_spacetime = st;

    double energy_bound1 = 0.0;
    if (cfg.checks.estimates) {
      const auto en = check_energy_estimate(run.trace, datum, spec.viscosity.r);
      row.energy_lhs = en.lhs;
      row.energy_bound = en.bound1;
      row.energy_pass = en.pass;
      energy_bound1 = en.bound1;
    } else {
      energy_bound1 = datum.l2_norm_sq / (2.0 * spec.viscosity.r);
    }

    verify_into_row(run.field, spec, cfg, run.trace.sqrt_eps_grad_sum(spec.domain.dim), row);

    if (cfg.checks.compactness) {
      const SmoothEntropyPair eta{0.0, 100.0};
      const auto split =
          entropy_production_split(run.field, spec, run.trace, eta, energy_bound1);
      row.production_vanishing = split.vanishing_bound;
      row.production_measure = split.measure_part;
      row.production_measure_bound = split.measure_bound;
    }

    rep.rows.push_back(row);
    kept_fields.push_back(std::move(run.field));
  }
  for (const auto& f : kept_fields) sweep_fields.push_back(&f);

  // d=2 common-grid div-curl defect
  if (cfg.checks.compactness && cfg.domain.dim == 2 && !cfg.couple_h_to_eps) {
    const auto seq = divcurl_defect(sweep_fields, cfg.flux, 8);
    for (std::size_t i = 0; i < rep.rows.size() && i < seq.defect.size(); ++i)
      rep.rows[i].defect = seq.defect[i];
  }

  rep.final_profiles = std::move(kept_fields);

  // verdict
  auto& v = rep.verdict;
  const auto all_rows = [&](auto&& pred) {
    bool ok = true;
    for (const auto& r : rep.rows) ok = ok && pred(r);
    return ok;
  };

  {
    Clause c;
    c.pass = all_rows([](const SweepRow& r) { return r.max_principle; });
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.eps);
    c.value = worst;
    c.tol = 1e-12;
    v["max_principle"] = c;
  }
  if (cfg.checks.estimates) {
    Clause c;
    c.pass = all_rows([](const SweepRow& r) { return r.energy_pass; });
    c.value = rep.rows.empty() ? 0.0 : rep.rows.back().energy_lhs;
    c.bound = rep.rows.empty() ? 0.0 : rep.rows.back().energy_bound;
    c.tol = 0.05;
    v["energy_estimate"] = c;

    Clause td;
    double mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (const auto& r : rep.rows) {
      mx = std::max(mx, r.time_deriv_l1);
      mn = std::min(mn, r.time_deriv_l1);
    }
    td.value = mn > 0.0 ? mx / mn : 0.0;
    td.bound = cfg.tol.timederiv_ratio;
    td.pass = rep.rows.size() < 2 || td.value <= td.bound;
    v["time_derivative_bounded"] = td;
  }
  {
    Clause c;
    c.pass = true;
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i)
      c.pass = c.pass && rep.rows[i + 1].L1_T < rep.rows[i].L1_T;
    c.value = rep.rows.empty() ? 0.0 : rep.rows.back().L1_T;
    v["reference_distance_decreasing"] = c;
  }
  if (cfg.checks.otto) {
    Clause c1;
    c1.pass = all_rows(
        [](const SweepRow& r) { return r.entropy_min_residual >= -r.entropy_tol; });
    c1.value = rep.rows.empty() ? 0.0 : rep.rows.back().entropy_min_residual;
    c1.tol = rep.rows.empty() ? 0.0 : rep.rows.back().entropy_tol;
    v["otto_interior_entropy"] = c1;

    Clause c2;
    c2.pass = all_rows([](const SweepRow& r) { return r.boundary_limit >= -r.boundary_tol; });
    c2.value = rep.rows.empty() ? 0.0 : rep.rows.back().boundary_limit;
    c2.tol = rep.rows.empty() ? 0.0 : rep.rows.back().boundary_tol;
    v["otto_boundary_limit"] = c2;

    Clause c3;
    c3.pass = all_rows([](const SweepRow& r) {
      return r.trace_decreasing && r.trace_final <= r.trace_tol;
    });
    c3.value = rep.rows.empty() ? 0.0 : rep.rows.back().trace_final;
    c3.tol = rep.rows.empty() ? 0.0 : rep.rows.back().trace_tol;
    v["otto_initial_trace"] = c3;
  }
  if (cfg.checks.kinetic) {
    Clause c;
    c.pass = all_rows([](const SweepRow& r) { return r.measure_bound_pass; });
    c.value = rep.rows.empty() ? 0.0 : rep.rows.back().kinetic_residual;
    v["kinetic_measure_bound"] = c;
  }
  if (cfg.checks.compactness) {
    Clause c;
    c.pass = true;
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i)
      c.pass = c.pass && rep.rows[i + 1].production_vanishing < rep.rows[i].production_vanishing;
    c.value = rep.rows.empty() ? 0.0 : rep.rows.back().production_vanishing;
    v["production_vanishing_decreasing"] = c;

    Clause cm;
    cm.pass = all_rows([](const SweepRow& r) {
      return r.production_measure <= 1.05 * r.production_measure_bound;
    });
    cm.value = rep.rows.empty() ? 0.0 : rep.rows.back().production_measure;
    cm.bound = rep.rows.empty() ? 0.0 : rep.rows.back().production_measure_bound;
    cm.tol = 0.05;
    v["production_measure_bounded"] = cm;

    if (cfg.domain.dim == 2 && !cfg.couple_h_to_eps && rep.rows.size() >= 2) {
      Clause cd;
      cd.pass = rep.rows.back().defect < rep.rows.front().defect;
      cd.value = rep.rows.back().defect;
      cd.bound = rep.rows.front().defect;
      v["divcurl_defect_decreasing"] = cd;
    }
  }

  rep.pass = true;
  for (const auto& [name, c] : v) rep.pass = rep.pass && c.pass;
  return rep;
}

SweepReport verify_field(const SpaceTimeField& field, const SweepConfig& cfg) {
  SweepReport rep;
  rep.config = cfg;

  ProblemSpec spec;
  spec.domain = field.domain;
  spec.horizon = field.times.back();
  spec.eps = field.eps > 0.0 ? field.eps : cfg.eps_list.back();
  spec.flux = cfg.flux;
  spec.viscosity = cfg.viscosity;
  spec.initial = cfg.initial;

  SweepRow row;
  row.eps = spec.eps;
  row.h = field.hx;
  row.dt = field.dt_step > 0.0 ? field.dt_step : field.dt;

  const auto gsq = field_grad_l2_sq(field);
  double sqrt_sum = 0.0;
  for (int a = 0; a < field.dim; ++a) sqrt_sum += std::sqrt(spec.eps * gsq[a]);
  verify_into_row(field, spec, cfg, sqrt_sum, row);
  rep.rows.push_back(row);

  auto& v = rep.verdict;
  Clause mp;
  mp.pass = row.max_principle;
  mp.value = field.max_abs();
  mp.bound = spec.bound_A();
  mp.tol = 1e-12;
  v["max_principle"] = mp;
  if (cfg.checks.otto) {
    Clause c1{row.entropy_min_residual, 0.0, row.entropy_tol,
              row.entropy_min_residual >= -row.entropy_tol};
    v["otto_interior_entropy"] = c1;
    Clause c2{row.boundary_limit, 0.0, row.boundary_tol, row.boundary_limit >= -row.boundary_tol};
    v["otto_boundary_limit"] = c2;
    Clause c3{row.trace_final, 0.0, row.trace_tol,
              row.trace_decreasing && row.trace_final <= row.trace_tol};
    v["otto_initial_trace"] = c3;
  }
  if (cfg.checks.kinetic) {
    Clause c{row.kinetic_residual, 0.0, 0.0, row.measure_bound_pass};
    v["kinetic_measure_bound"] = c;
  }
  rep.pass = true;
  for (const auto& [name, c] : v) rep.pass = rep.pass && c.pass;
  return rep;
}

void emit_report(const SweepReport& rep, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  {
    std::ofstream csv(fs::path(dir) / "sweep.csv");
    if (!csv) throw std::runtime_error("emit_report: cannot write sweep.csv in " + dir);
    csv << "eps,h,dt,L1_T,L1_spacetime,max_principle,energy_lhs,energy_bound,"
           "entropy_min_residual,boundary_limit,defect,kinetic_residual\n";
    char buf[512];
    for (const auto& r : rep.rows) {
      std::snprintf(buf, sizeof buf,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    r.eps, r.h, r.dt, r.L1_T, r.L1_spacetime, r.max_principle ? 1 : 0,
                    r.energy_lhs, r.energy_bound, r.entropy_min_residual, r.boundary_limit,
                    r.defect, r.kinetic_residual);
      csv << buf;
    }
  }

  {
    nlohmann::json j;
    j["pass"] = rep.pass;
    j["problem"] = rep.config.problem;
    nlohmann::json cr = nlohmann::json::object();
    for (const auto& [name, c] : rep.verdict) {
      cr[name] = {{"value", c.value}, {"bound", c.bound}, {"tol", c.tol}, {"pass", c.pass}};
    }
    j["criteria"] = cr;
    std::ofstream out(fs::path(dir) / "verdict.json");
    out << j.dump(2) << "\n";
  }

  char buf[256];
  for (std::size_t m = 0; m < rep.final_profiles.size(); ++m) {
    const auto& f = rep.final_profiles[m];
    std::snprintf(buf, sizeof buf, "profile_eps_%02zu.dat", m);
    std::ofstream dat(fs::path(dir) / buf);
    const int n = f.nt() - 1;
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i) {
        if (f.dim == 1)
          std::snprintf(buf, sizeof buf, "%.17g %.17g\n", f.x_center(i), f.at(n, i, j));
        else
          std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", f.x_center(i), f.y_center(j),
                        f.at(n, i, j));
        dat << buf;
      }
  }
}

}  // namespace viscolimit
