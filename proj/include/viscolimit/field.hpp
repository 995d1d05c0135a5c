#pragma once

#include <string>
#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// Cell-centered values on a uniform space grid at stored time slices.
// Dirichlet-0 ghost cells are the boundary convention for every producer.
struct SpaceTimeField {
  int dim = 1;
  int nx = 0, ny = 1;
  double hx = 0.0, hy = 0.0;
  double dt = 0.0;       // spacing of stored slices (solver step may be finer)
  double dt_step = 0.0;  // actual integration step of the producer
  double eps = 0.0;
  SpatialDomain domain;
  std::vector<double> times;
  std::vector<double> data;  // slice-major: data[(n*ny + j)*nx + i]
  std::string solver_id, scheme_id = "dirichlet0-ghost";

  int nt() const { return static_cast<int>(times.size()); }
  double at(int n, int i, int j = 0) const { return data[(std::size_t(n) * ny + j) * nx + i]; }
  double& at(int n, int i, int j = 0) { return data[(std::size_t(n) * ny + j) * nx + i]; }
  double x_center(int i) const { return domain.lo[0] + (i + 0.5) * hx; }
  double y_center(int j) const { return dim == 2 ? domain.lo[1] + (j + 0.5) * hy : 0.0; }
  double cell_volume() const { return dim == 1 ? hx : hx * hy; }
  const double* slice(int n) const { return data.data() + std::size_t(n) * nx * ny; }

  bool all_finite() const;
  double max_abs() const;

  // L1(Omega) distance between slice n and a sampler (midpoint rule)
  double l1_distance_at(int n, const std::function<double(double, double)>& g) const;
};

// CSV export: header "t,x[,y],u", one row per stored cell sample.
void export_field_csv(const SpaceTimeField& f, const std::string& path);
SpaceTimeField import_field_csv(const std::string& path);

// Compact JSON run manifest (h, dt, eps, scheme ids, estimate summaries).
void export_run_manifest(const SpaceTimeField& f, const std::string& path,
                         const std::vector<std::pair<std::string, double>>& summaries);

}  // namespace viscolimit
