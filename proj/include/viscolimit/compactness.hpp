#pragma once

#include <vector>

#include "viscolimit/entropy.hpp"
#include "viscolimit/field.hpp"
#include "viscolimit/model.hpp"
#include "viscolimit/viscous_solver.hpp"

namespace viscolimit {

// F11(l) = int_0^l (f1')^2, F12 = int_0^l f1' f2', F22 = int_0^l (f2')^2,
// cached on a lambda table with linear interpolation between nodes.
struct FijTable {
  double lo = -1.0, hi = 1.0;
  std::vector<double> lam, f11, f12, f22;

  static FijTable build(const FluxModel& flux2d, double lo, double hi, int nodes = 1025,
                        double tol = 1e-10);
  double F11(double l) const { return interp(f11, l); }
  double F12(double l) const { return interp(f12, l); }
  double F22(double l) const { return interp(f22, l); }

 private:
  double interp(const std::vector<double>& v, double l) const;
};

struct SplitReport {
  double vanishing_bound = 0.0;  // eps ||B|| ||eta'|| ||grad u||_{L2(Omega_T)}
  double measure_part = 0.0;     // int int eps sum_j B(u)(d_j u)^2 |eta''|
  double measure_bound = 0.0;    // C' ||B|| ||eta''|| with C' from the energy estimate
  bool measure_pass = false;
};

// Entropy-production split for one smooth entropy pair on one run.
SplitReport entropy_production_split(const SpaceTimeField& field, const ProblemSpec& spec,
                                     const EstimateTrace& trace, const SmoothEntropyPair& eta,
                                     double energy_bound1);

struct DefectSequence {
  std::vector<double> eps;
  std::vector<double> defect;
};

// Macro-cell div-curl defect over a common-grid eps-sweep (d=2):
// || <F11 F22 - F12^2> - (<F11><F22> - <F12>^2) ||_{L1 over macro-cells},
// macro-cells of macro x macro cells x macro stored slices.
DefectSequence divcurl_defect(const std::vector<const SpaceTimeField*>& sweep,
                              const FluxModel& flux2d, int macro);

// d=1 Tartar commutation surrogate with the pair (u, f) against Kruzhkov at k.
double tartar_commutation_defect(const SpaceTimeField& field, const FluxModel& flux, double k,
                                 int macro);

}  // namespace viscolimit
