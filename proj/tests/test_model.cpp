#include <cmath>
#include <random>

#include "doctest.h"
#include "viscolimit/model.hpp"

using namespace viscolimit;

namespace {

ProblemSpec burgers_spec_1d() {
  ProblemSpec s;
  s.domain = make_interval(0.0, 1.0);
  s.horizon = 0.3;
  s.eps = 0.05;
  s.flux = make_flux_burgers();
  s.viscosity = make_viscosity_unit();
  s.initial = make_initial_bv_step(0.5);  // A = 1, I = [-1,1]
  return s;
}

}  // namespace

TEST_CASE("lipschitz bound on the invariant interval") {
  CHECK(lipschitz_bound(make_flux_burgers(), -1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lipschitz_bound(make_flux_linear(-2.5), -2.0, 2.0) == doctest::Approx(2.5).epsilon(1e-12));
  // f = (u^2/2, u^3/3): max(|c|, c^2) = 1 on [-1,1]
  CHECK(lipschitz_bound(make_flux_power_mix_2d(), -1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("flux derivative consistency: centered differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double delta = 1e-4;
  for (const auto& flux : {make_flux_burgers(), make_flux_cubic(),
                           make_flux_polynomial({0.3, -1.0, 0.5, 0.25})}) {
    // third-derivative surrogate from differencing f''
    double d3 = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double z = dist(rng);
      d3 = std::max(d3, std::abs(flux.ddf(0, z + delta) - flux.ddf(0, z - delta)) / (2 * delta));
    }
    for (int i = 0; i < 100; ++i) {
      const double z = dist(rng);
      const double fd = (flux.f(0, z + delta) - flux.f(0, z - delta)) / (2 * delta);
      CHECK(std::abs(flux.df(0, z) - fd) <= 10.0 * delta * delta * d3 + 1e-8);
    }
  }
}

TEST_CASE("viscosity models stay above the declared lower bound") {
  const auto v = make_viscosity_two_plus_sin();
  CHECK(v.r == 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double z = -4.0 + 8.0 * i / 9999.0;
    CHECK(v.B(z) >= v.r);
  }
  CHECK(v.max_on(-1.0, 1.0) <= 3.0);
  CHECK_THROWS_AS(make_viscosity_constant(0.0), std::invalid_argument);
}

TEST_CASE("hypothesis E: Burgers passes, linear flux fails") {
  auto spec = burgers_spec_1d();
  const auto rep = check_hypothesis(spec, Hypothesis::E);
  CHECK(rep.pass);

  spec.flux = make_flux_linear(2.0);
  const auto bad = check_hypothesis(spec, Hypothesis::E);
  CHECK_FALSE(bad.pass);
  bool found = false;
  for (const auto& c : bad.clauses)
    if (c.name.find("non-constant") != std::string::npos) {
      found = true;
      CHECK_FALSE(c.pass);
      CHECK(c.witness == doctest::Approx(0.0));
    }
  CHECK(found);
}

TEST_CASE("hypothesis F: power-mix flux has independent derivatives") {
  ProblemSpec spec;
  spec.domain = make_rectangle(0.0, 1.0, 0.0, 1.0);
  spec.horizon = 0.2;
  spec.eps = 0.05;
  spec.flux = make_flux_power_mix_2d();
  spec.viscosity = make_viscosity_unit();
  spec.initial = make_initial_riemann(1.0, 0.0, 0.4);
  const auto rep = check_hypothesis(spec, Hypothesis::F);
  CHECK(rep.pass);
  for (const auto& c : rep.clauses)
    if (c.name.find("independent") != std::string::npos) CHECK(c.witness > 0.5);
}

TEST_CASE("hypothesis D nondegeneracy clause on Burgers") {
  const auto rep = check_hypothesis(burgers_spec_1d(), Hypothesis::D);
  CHECK(rep.pass);
}

TEST_CASE("hypothesis/dimension mismatch is rejected") {
  CHECK_THROWS_AS(check_hypothesis(burgers_spec_1d(), Hypothesis::F), std::invalid_argument);
  ProblemSpec spec2;
  spec2.domain = make_rectangle(0.0, 1.0, 0.0, 1.0);
  spec2.flux = make_flux_power_mix_2d();
  spec2.viscosity = make_viscosity_unit();
  spec2.initial = make_initial_constant(0.5);
  CHECK_THROWS_AS(check_hypothesis(spec2, Hypothesis::E), std::invalid_argument);
}

TEST_CASE("spec validation") {
  auto spec = burgers_spec_1d();
  spec.eps = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = burgers_spec_1d();
  spec.horizon = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_interval(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("polynomial flux catalog evaluates Horner derivatives") {
  const auto p = make_flux_polynomial({1.0, 2.0, 3.0});  // 1 + 2u + 3u^2
  CHECK(p.f(0, 2.0) == doctest::Approx(17.0));
  CHECK(p.df(0, 2.0) == doctest::Approx(14.0));
  CHECK(p.ddf(0, 2.0) == doctest::Approx(6.0));
}
