#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "viscolimit/model.hpp"

namespace viscolimit {

// Versioned sweep configuration, parsed strictly: unknown keys are rejected.
struct SweepConfig {
  int schema_version = 1;
  std::string problem = "unnamed";
  SpatialDomain domain = make_interval(0.0, 1.0);
  double T = 0.3;
  FluxModel flux = make_flux_burgers();
  ViscosityModel viscosity = make_viscosity_unit();
  InitialDatum initial = make_initial_constant(0.0);
  std::vector<double> eps_list{0.1, 0.05, 0.025, 0.0125};
  int n_finest = 400;
  bool couple_h_to_eps = true;  // h proportional to eps (default); else fixed grid

  struct Checks {
    bool otto = true, kinetic = true, compactness = true, estimates = true;
  } checks;

  std::uint64_t bump_seed = 1234;
  int bump_count = 20;
  int kinetic_bump_count = 10;

  struct Tolerances {
    double c_init_trace = 10.0;   // final L1 trace distance <= c*(h+eps)
    double c_interior = 10.0;     // interior residual >= -c*(h+eps)*||phi||_C1*TV
    double c_boundary = 1.0;      // boundary limit estimate >= -c*(h+eps)
    double timederiv_ratio = 3.0; // max/min of ||du/dt||_L1 across the sweep
  } tol;

  int workers = 0;  // 0 = library default
  std::string output_dir = "out";

  void validate() const;  // eps list decreasing and positive, etc.

  static SweepConfig from_json_file(const std::string& path);
  static SweepConfig from_json_text(const std::string& text);
};

}  // namespace viscolimit
