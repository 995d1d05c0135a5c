#pragma once

#include <map>
#include <string>
#include <vector>

#include "viscolimit/config.hpp"
#include "viscolimit/field.hpp"
#include "viscolimit/viscous_solver.hpp"

namespace viscolimit {

struct SweepRow {
  double eps = 0, h = 0, dt = 0;
  double L1_T = 0, L1_spacetime = 0;  // distances to the Godunov reference
  bool max_principle = false;
  double energy_lhs = 0, energy_bound = 0;
  bool energy_pass = false;
  double entropy_min_residual = 0, entropy_tol = 0;
  double boundary_limit = 0, boundary_tol = 0;
  double defect = 0;
  double kinetic_residual = 0;
  bool measure_bound_pass = true;
  double trace_final = 0, trace_tol = 0;
  bool trace_decreasing = false;
  double time_deriv_l1 = 0;
  double production_vanishing = 0, production_measure = 0, production_measure_bound = 0;
};

struct Clause {
  double value = 0, bound = 0, tol = 0;
  bool pass = false;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::map<std::string, Clause> verdict;
  bool pass = false;
  std::vector<SpaceTimeField> final_profiles;  // per-eps final slices for .dat export
};

SweepReport run_sweep(const SweepConfig& config);

// sweep.csv, verdict.json, profile_*.dat under dir (created if absent);
// deterministic bytes for a fixed config.
void emit_report(const SweepReport& report, const std::string& dir);

// Run the enabled verifications against an imported field (CLI `verify`).
SweepReport verify_field(const SpaceTimeField& field, const SweepConfig& config);

}  // namespace viscolimit
