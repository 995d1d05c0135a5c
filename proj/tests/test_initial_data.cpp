#include <cmath>

#include "doctest.h"
#include "viscolimit/initial_data.hpp"
#include "viscolimit/quadrature.hpp"

using namespace viscolimit;

TEST_CASE("mollifier profile has unit mass") {
  const double mass = integrate([](double t) { return mollifier_rho(t); }, -1.0, 1.0, 1e-12);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mollifier_rho(1.0) == 0.0);
  CHECK(mollifier_rho(-1.0) == 0.0);
}

TEST_CASE("zero datum mollifies to zero") {
  const auto dom = make_interval(0.0, 1.0);
  const auto d = mollify_dirichlet(make_initial_constant(0.0), dom, 0.02);
  CHECK(d.sup_norm == 0.0);
  CHECK(d.l1_dist_to_u0 == 0.0);
  CHECK(d.grad_l1 == 0.0);
  CHECK(d.lap_l1 == 0.0);
  CHECK(d.eval(0.37, 0.0) == 0.0);
}

TEST_CASE("constant datum: interior plateau and boundary collar") {
  const auto dom = make_interval(0.0, 1.0);
  const double eps = 0.02;
  const auto d = mollify_dirichlet(make_initial_constant(1.0), dom, eps);
  // exactly 1 on [4*eps, 1-4*eps] (plateau actually starts at 3*eps)
  for (double x : {0.08, 0.2, 0.5, 0.8, 0.92})
    CHECK(d.eval(x, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // vanishes on the collar of width eps
  CHECK(d.eval(0.5 * eps, 0.0) == 0.0);
  CHECK(d.eval(1.0 - 0.5 * eps, 0.0) == 0.0);
  // support arithmetic: L1 error <= 6*eps = 0.12 (measured ~ 4*eps)
  CHECK(d.l1_dist_to_u0 <= 0.12);
  CHECK(d.l1_dist_to_u0 >= 0.02);
  CHECK(d.sup_norm <= 1.0 + 1e-12);
}

TEST_CASE("sign step datum: contraction and L1 error") {
  const auto dom = make_interval(0.0, 1.0);
  const double eps = 0.01;
  const auto d = mollify_dirichlet(make_initial_bv_step(0.5), dom, eps);
  CHECK(d.sup_norm <= 1.0 + 1e-12);
  // jump smoothing ~eps plus two collar ramps of height 1
  CHECK(d.l1_dist_to_u0 <= 10.0 * eps);
  // discrete TV: interior jump 2 plus the two boundary traces
  CHECK(d.total_variation == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("datum gradient evaluator matches finite differences of the evaluator") {
  const auto dom = make_interval(0.0, 1.0);
  const auto d = mollify_dirichlet(make_initial_constant(1.0), dom, 0.05);
  for (double x : {0.06, 0.11, 0.16, 0.5, 0.87}) {
    const double fd = (d.eval(x + 1e-6, 0.0) - d.eval(x - 1e-6, 0.0)) / 2e-6;
    CHECK(d.grad(x, 0.0, 0) == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("sup-norm contraction and L1 convergence along an eps sweep") {
  const auto dom = make_interval(0.0, 1.0);
  const auto u0 = make_initial_riemann(1.0, 0.0, 0.3);
  double prev = 1e300;
  for (double eps : {0.04, 0.02, 0.01}) {
    const auto d = mollify_dirichlet(u0, dom, eps);
    CHECK(d.sup_norm <= u0.sup_norm + 1e-12);
    CHECK(d.l1_dist_to_u0 < prev);
    prev = d.l1_dist_to_u0;
  }
  // final distance below 10 * eps_min
  CHECK(prev <= 10.0 * 0.01);
}

TEST_CASE("four-term bound stays bounded across the sweep") {
  const auto dom = make_interval(0.0, 1.0);
  const auto u0 = make_initial_constant(1.0);
  double mx = 0.0, mn = 1e300;
  for (double eps : {0.04, 0.02, 0.01}) {
    const auto d = mollify_dirichlet(u0, dom, eps);
    const auto b = verify_initial_bounds(d, eps);
    CHECK(b.sup == d.sup_norm);
    mx = std::max(mx, b.total());
    mn = std::min(mn, b.total());
    // eps * ||grad||^2_{L2} is O(1): gradient ~1/eps on an eps-width set
    CHECK(b.eps_grad_l2_sq > 0.1);
    CHECK(b.eps_grad_l2_sq < 10.0);
  }
  CHECK(mx / mn <= 3.0);
}

TEST_CASE("mollifier rejects eps too large for the domain") {
  const auto dom = make_interval(0.0, 1.0);
  CHECK_THROWS_AS(mollify_dirichlet(make_initial_constant(1.0), dom, 0.2), std::invalid_argument);
}

TEST_CASE("2-D mollification: plateau, collar and contraction") {
  const auto dom = make_rectangle(0.0, 1.0, 0.0, 1.0);
  const double eps = 0.04;
  const auto d = mollify_dirichlet(make_initial_constant(1.0), dom, eps);
  CHECK(d.eval(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(d.eval(0.02, 0.5) == 0.0);
  CHECK(d.eval(0.5, 0.99) == 0.0);
  CHECK(d.sup_norm <= 1.0 + 1e-12);
  CHECK(d.l1_dist_to_u0 <= 4.0 * 6.0 * eps);  // four faces
}
