// Timing comparison of the serial reference kernels against the OpenMP ones.
// Not part of the test suite; build target viscolimit_bench.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "viscolimit/kernels.hpp"

using namespace viscolimit;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  const FluxModel flux1 = make_flux_burgers();
  const FluxModel flux2 = make_flux_power_mix_2d();
  const ViscosityModel visc = make_viscosity_two_plus_sin();

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled\n");
#endif

  {
    const int n = 1 << 20;
    std::vector<double> u(n), out(n);
    for (double& v : u) v = dist(rng);
    const double h = 1.0 / n, eps = 0.01;
    const double ts = time_ms([&] { kernels::rhs_1d_serial(u.data(), n, h, eps, flux1, visc, out.data()); }, 5);
    const double tp = time_ms([&] { kernels::rhs_1d_omp(u.data(), n, h, eps, flux1, visc, out.data()); }, 5);
    std::printf("rhs_1d  n=%d        serial %8.2f ms   omp %8.2f ms   speedup %.2fx\n", n, ts, tp,
                ts / tp);
  }
  {
    const int nx = 768, ny = 768;
    std::vector<double> u(std::size_t(nx) * ny), out(std::size_t(nx) * ny);
    for (double& v : u) v = dist(rng);
    const double h = 1.0 / nx, eps = 0.01;
    const double ts = time_ms(
        [&] { kernels::rhs_2d_serial(u.data(), nx, ny, h, h, eps, flux2, visc, out.data()); }, 5);
    const double tp = time_ms(
        [&] { kernels::rhs_2d_omp(u.data(), nx, ny, h, h, eps, flux2, visc, out.data()); }, 5);
    std::printf("rhs_2d  %dx%d     serial %8.2f ms   omp %8.2f ms   speedup %.2fx\n", nx, ny, ts,
                tp, ts / tp);
  }
  return 0;
}
