#include <cmath>
#include <random>

#include "doctest.h"
#include "viscolimit/entropy.hpp"

using namespace viscolimit;

TEST_CASE("interval distance") {
  CHECK(interval_dist(0.5, 0.0, 1.0) == 0.0);
  CHECK(interval_dist(1.5, 0.0, 1.0) == doctest::Approx(0.5));
  // swapped endpoints: I[2,-1] = [-1,2]
  CHECK(interval_dist(-3.0, 2.0, -1.0) == doctest::Approx(2.0));
}

TEST_CASE("Kruzhkov flux values for Burgers") {
  const auto flux = make_flux_burgers();
  CHECK(kruzhkov_flux(2.0, 0.0, flux)[0] == doctest::Approx(2.0));
  CHECK(kruzhkov_flux(0.7, 0.7, flux)[0] == 0.0);
  // symmetry of u^2/2: f(-1) = f(1)
  CHECK(kruzhkov_flux(-1.0, 1.0, flux)[0] == doctest::Approx(0.0));
}

TEST_CASE("Kruzhkov flux equals the limit flux with w = k") {
  const auto flux = make_flux_cubic();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const double u = dist(rng), k = dist(rng);
    const auto q = kruzhkov_flux(u, k, flux);
    const auto F = eval_limit_flux(u, k, k, flux);
    CHECK(q[0] == doctest::Approx(F[0]).epsilon(1e-12));
  }
}

TEST_CASE("boundary entropy closed-form value") {
  // dist(5, I[0,2]) = 3, l = 1: H = sqrt(10) - 1
  const BoundaryEntropyPair pair{2.0, 0.0, 1.0};
  CHECK(pair.H(5.0) == doctest::Approx(std::sqrt(10.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("boundary pair vanishes at z = w with vanishing slope") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const auto flux = make_flux_burgers();
  for (double l : {1.0, 10.0, 100.0}) {
    for (int i = 0; i < 50; ++i) {
      const BoundaryEntropyPair pair{dist(rng), dist(rng), l};
      CHECK(std::abs(pair.H(pair.w)) <= 1e-10);
      CHECK(std::abs(pair.dH1(pair.w)) <= 1e-10);
      const auto v = eval_boundary_pair(pair, pair.w, flux);
      CHECK(std::abs(v.Q[0]) <= 1e-10);
      CHECK(v.H == pair.H(pair.w));
    }
  }
}

TEST_CASE("H_l approximates the distance uniformly at rate 1/l") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double l : {10.0, 100.0, 1000.0}) {
    for (int i = 0; i < 1000; ++i) {
      const double z = dist(rng), w = dist(rng), k = dist(rng);
      const BoundaryEntropyPair pair{k, w, l};
      const double d = interval_dist(z, w, k);
      const double H = pair.H(z);
      CHECK(H <= d + 1e-15);             // sqrt(d^2+s^2) - s <= d
      CHECK(d - H <= 1.0 / l + 1e-15);   // d - (sqrt(d^2+s^2)-s) <= s
    }
  }
}

TEST_CASE("Q_l converges to the limit boundary flux") {
  const auto flux = make_flux_burgers();
  // Burgers, k=0, w=0, z=0.8: limit = f(0.8)-f(0) = 0.32
  for (double l : {10.0, 100.0, 1000.0, 10000.0}) {
    const BoundaryEntropyPair pair{0.0, 0.0, l};
    const auto Q = pair.Q(0.8, flux);
    CHECK(std::abs(Q[0] - 0.32) <= 1.0 / l + 1e-7);
  }
  // random triples: |Q_l - F| <= M/l + quadrature tolerance (M = Lipschitz on the range)
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double z = dist(rng), w = dist(rng), k = dist(rng);
    const BoundaryEntropyPair pair{k, w, 1000.0};
    const auto Q = pair.Q(z, flux);
    const auto F = eval_limit_flux(z, w, k, flux);
    CHECK(std::abs(Q[0] - F[0]) <= 1.0 / 1000.0 + 1e-7);
  }
}

TEST_CASE("limit flux case table") {
  const auto flux = make_flux_burgers();
  // k <= w <= z: f(z) - f(w)
  CHECK(eval_limit_flux(2.0, 1.0, 0.0, flux)[0] == doctest::Approx(1.5));
  // w <= z <= k: 0
  CHECK(eval_limit_flux(0.5, 0.0, 1.0, flux)[0] == 0.0);
  // z <= w <= k: continuous extension f(w) - f(z); the printed table's
  // f(w)-f(k) would break the continuity the same remark asserts
  CHECK(eval_limit_flux(-2.0, -1.0, 0.0, flux)[0] == doctest::Approx(0.5 - 2.0));
  // z <= k <= w: f(k) - f(z)
  CHECK(eval_limit_flux(-0.8, 0.0, 0.0, flux)[0] == doctest::Approx(-0.32));
}

TEST_CASE("limit flux is continuous across case transitions and vanishes at z=w") {
  const auto flux = make_flux_cubic();
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double delta = 1e-8;
  for (int i = 0; i < 500; ++i) {
    const double w = dist(rng), k = dist(rng);
    for (double z0 : {w, k, 0.5 * (w + k)}) {
      const double a = eval_limit_flux(z0 - delta, w, k, flux)[0];
      const double b = eval_limit_flux(z0 + delta, w, k, flux)[0];
      CHECK(std::abs(a - b) <= 1e-7);
    }
    CHECK(eval_limit_flux(w, w, k, flux)[0] == 0.0);
  }
}

TEST_CASE("smooth entropy pair: approximation, convexity, chain rule") {
  const auto flux = make_flux_burgers();
  const SmoothEntropyPair eta{0.3, 10.0};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int i = 0; i < 300; ++i) {
    const double z = dist(rng);
    CHECK(std::abs(eta.eta(z) - std::abs(z - eta.k)) <= 1.0 / eta.l + 1e-15);
    CHECK(eta.eta_pp(z) >= 0.0);
    // eta'' by finite differences of eta'
    const double d = 1e-6;
    const double fd = (eta.eta_p(z + d) - eta.eta_p(z - d)) / (2 * d);
    CHECK(fd >= -1e-6);
    // chain rule: dq/dz = eta' f'
    const double dq = (eta.q(z + 1e-5, flux, 0, 1e-12) - eta.q(z - 1e-5, flux, 0, 1e-12)) / 2e-5;
    CHECK(std::abs(dq - eta.eta_p(z) * flux.df(0, z)) <= 1e-5);
  }
  CHECK(eta.eta_pp_sup(-1.0, 1.0) == doctest::Approx(eta.l).epsilon(1e-6));
}
