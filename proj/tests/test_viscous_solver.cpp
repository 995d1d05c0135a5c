#include <cmath>

#include "doctest.h"
#include "viscolimit/reference_solver.hpp"
#include "viscolimit/viscous_solver.hpp"

using namespace viscolimit;

namespace {

ProblemSpec make_spec(double eps, InitialDatum u0, ViscosityModel visc = make_viscosity_unit(),
                      double T = 0.2) {
  ProblemSpec s;
  s.domain = make_interval(0.0, 1.0);
  s.horizon = T;
  s.eps = eps;
  s.flux = make_flux_burgers();
  s.viscosity = std::move(visc);
  s.initial = std::move(u0);
  return s;
}

}  // namespace

TEST_CASE("stable_dt rule") {
  // Burgers on I=[-1,1] (M=1), B=1, eps=0.01, h=0.01: 0.4*min(0.01, 0.005)
  auto spec = make_spec(0.01, make_initial_bv_step(0.5));
  CHECK(stable_dt(spec, 0.01) == doctest::Approx(0.002).epsilon(1e-12));

  // eps -> 0: pure CFL term
  spec.eps = 1e-14;
  CHECK(stable_dt(spec, 0.01) == doctest::Approx(0.004).epsilon(1e-9));

  // d=2, otherwise equal: both terms halve
  ProblemSpec spec2;
  spec2.domain = make_rectangle(0.0, 1.0, 0.0, 1.0);
  spec2.horizon = 0.2;
  spec2.eps = 0.01;
  spec2.flux = make_flux_power_mix_2d();  // M = 1 on [-1,1]
  spec2.viscosity = make_viscosity_unit();
  spec2.initial = make_initial_bv_step(0.5);
  CHECK(stable_dt(spec2, 0.01) == doctest::Approx(0.001).epsilon(1e-12));
}

TEST_CASE("zero datum stays zero") {
  const auto spec = make_spec(0.05, make_initial_constant(0.0));
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  const auto run = solve_viscous(spec, datum, 64);
  CHECK(run.field.max_abs() == 0.0);
  CHECK(run.trace.eps_grad_sq == 0.0);
  CHECK(run.trace.time_deriv_l1 == 0.0);
  CHECK(check_max_principle(run.field, 0.0));
}

TEST_CASE("maximum principle and energy estimate on a Burgers step run") {
  const auto spec = make_spec(0.05, make_initial_riemann(1.0, 0.0, 0.5));
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  const auto run = solve_viscous(spec, datum, 100);
  CHECK(run.field.all_finite());
  CHECK(check_max_principle(run.field, 1.0));

  const auto en = check_energy_estimate(run.trace, datum, spec.viscosity.r);
  CHECK(en.pass);
  CHECK(en.lhs <= 1.05 * en.bound1);
  CHECK(en.bound1 <= en.bound2);
}

TEST_CASE("energy bound depends on B only through r") {
  MollifiedDatum d;
  d.l2_norm_sq = 0.5;
  d.sup_norm = 1.0;
  d.domain = make_interval(0.0, 1.0);
  EstimateTrace tr;
  tr.eps_grad_sq = 0.1;
  const auto rep = check_energy_estimate(tr, d, 1.0);
  CHECK(rep.bound1 == doctest::Approx(0.25));
  CHECK(rep.bound2 == doctest::Approx(0.5));
  CHECK(rep.pass);
  // B = 2 + sin(u) also has r = 1: identical bound
  CHECK(make_viscosity_two_plus_sin().r == 1.0);
}

TEST_CASE("max principle checker flags violations") {
  SpaceTimeField f;
  f.dim = 1;
  f.nx = 4;
  f.hx = 0.25;
  f.domain = make_interval(0.0, 1.0);
  f.times = {0.0, 0.1};
  f.data = {0.0, 0.5, -0.5, 0.0, 0.0, 1.5, 0.0, 0.0};
  CHECK_FALSE(check_max_principle(f, 1.0));
  f.data[5] = 0.9;
  CHECK(check_max_principle(f, 1.0));

  SpaceTimeField z = f;
  z.data.assign(8, 0.0);
  CHECK(check_max_principle(z, 0.0));
}

TEST_CASE("time derivative L1: traveling shock oracle and stationary field") {
  // field sampled from the exact shock (speed 1/2, height 1): integral = s*jump*T
  SpaceTimeField f;
  f.dim = 1;
  f.nx = 400;
  f.hx = 1.0 / f.nx;
  f.domain = make_interval(0.0, 1.0);
  const double T = 0.5;
  const int nt = 201;
  for (int n = 0; n < nt; ++n) f.times.push_back(T * n / (nt - 1));
  f.dt = T / (nt - 1);
  f.data.resize(std::size_t(nt) * f.nx);
  for (int n = 0; n < nt; ++n)
    for (int i = 0; i < f.nx; ++i) {
      const double t = std::max(f.times[n], 1e-12);
      f.at(n, i) = exact_burgers_riemann(1.0, 0.0, 0.2, t, f.x_center(i));
    }
  CHECK(time_derivative_l1(f) == doctest::Approx(0.5 * 1.0 * T).epsilon(0.05));

  // stationary profile: zero up to discretization noise
  SpaceTimeField g = f;
  for (int n = 0; n < nt; ++n)
    for (int i = 0; i < g.nx; ++i) g.at(n, i) = std::sin(3.0 * g.x_center(i));
  CHECK(time_derivative_l1(g) <= 1e-10);

  SpaceTimeField z = f;
  z.data.assign(z.data.size(), 0.0);
  CHECK(time_derivative_l1(z) == 0.0);
}

TEST_CASE("estimate trace accumulates monotonically") {
  const auto spec = make_spec(0.05, make_initial_riemann(1.0, 0.0, 0.5));
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  const auto run = solve_viscous(spec, datum, 64);
  for (std::size_t i = 0; i + 1 < run.trace.eps_grad_sq_per_slice.size(); ++i) {
    CHECK(run.trace.eps_grad_sq_per_slice[i] <= run.trace.eps_grad_sq_per_slice[i + 1] + 1e-15);
    CHECK(run.trace.time_deriv_l1_per_slice[i] <= run.trace.time_deriv_l1_per_slice[i + 1] + 1e-15);
  }
}

TEST_CASE("sup norm decays monotonically on a diffusion-dominated run") {
  const auto spec = make_spec(0.5, make_initial_sine(make_interval(0.0, 1.0), 1.0));
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps / 10.0);
  ProblemSpec s2 = spec;
  s2.eps = spec.eps;
  // datum must carry the run's eps
  const auto datum2 = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  const auto run = solve_viscous(s2, datum2, 64);
  for (std::size_t i = 0; i + 1 < run.trace.sup_per_slice.size(); ++i)
    CHECK(run.trace.sup_per_slice[i + 1] <= run.trace.sup_per_slice[i] + 1e-12);
}

TEST_CASE("grid refinement: first-order self convergence on a smooth run") {
  const auto u0 = make_initial_sine(make_interval(0.0, 1.0), 0.8);
  auto total_abs = [&](int n) {
    const auto spec = make_spec(0.1, u0, make_viscosity_unit(), 0.15);
    const auto datum = mollify_dirichlet(u0, spec.domain, spec.eps);
    const auto run = solve_viscous(spec, datum, n);
    // int int |u|
    double s = 0.0;
    const auto& f = run.field;
    for (int m = 0; m + 1 < f.nt(); ++m)
      for (int i = 0; i < f.nx; ++i)
        s += std::abs(f.at(m, i)) * f.hx * (f.times[m + 1] - f.times[m]);
    return s;
  };
  const double i32 = total_abs(32), i64 = total_abs(64), i128 = total_abs(128);
  CHECK(std::abs(i32 - i64) / std::abs(i64 - i128) >= 1.5);
}

TEST_CASE("solver rejects bad inputs") {
  const auto spec = make_spec(0.05, make_initial_constant(0.5));
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  CHECK_THROWS_AS(solve_viscous(spec, datum, 8), std::invalid_argument);
  const auto wrong = mollify_dirichlet(spec.initial, spec.domain, 0.02);
  CHECK_THROWS_AS(solve_viscous(spec, wrong, 64), std::invalid_argument);
}

TEST_CASE("serial option reproduces the OpenMP run bitwise") {
  const auto spec = make_spec(0.05, make_initial_riemann(0.8, 0.0, 0.4), make_viscosity_unit(),
                              0.05);
  const auto datum = mollify_dirichlet(spec.initial, spec.domain, spec.eps);
  SolverOptions par, ser;
  ser.use_omp = false;
  const auto a = solve_viscous(spec, datum, 48, par);
  const auto b = solve_viscous(spec, datum, 48, ser);
  REQUIRE(a.field.data.size() == b.field.data.size());
  for (std::size_t i = 0; i < a.field.data.size(); ++i) CHECK(a.field.data[i] == b.field.data[i]);
}
