#include "viscolimit/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "viscolimit/quadrature.hpp"

namespace viscolimit {

FijTable FijTable::build(const FluxModel& flux2d, double lo, double hi, int nodes, double tol) {
  if (flux2d.dim() != 2) throw std::invalid_argument("FijTable: flux must be 2-D");
  FijTable t;
  t.lo = lo;
  t.hi = hi;
  t.lam.resize(nodes);
  t.f11.assign(nodes, 0.0);
  t.f12.assign(nodes, 0.0);
  t.f22.assign(nodes, 0.0);
  for (int i = 0; i < nodes; ++i) t.lam[i] = lo + (hi - lo) * i / (nodes - 1);

  auto g11 = [&](double s) { const double d = flux2d.df(0, s); return d * d; };
  auto g12 = [&](double s) { return flux2d.df(0, s) * flux2d.df(1, s); };
  auto g22 = [&](double s) { const double d = flux2d.df(1, s); return d * d; };

  // cumulative from 0 (F(0) = 0), segment-wise adaptive quadrature
  int i0 = 0;
  for (int i = 0; i < nodes; ++i)
    if (std::abs(t.lam[i]) < std::abs(t.lam[i0])) i0 = i;
  t.f11[i0] = integrate(g11, 0.0, t.lam[i0], tol);
  t.f12[i0] = integrate(g12, 0.0, t.lam[i0], tol);
  t.f22[i0] = integrate(g22, 0.0, t.lam[i0], tol);
  for (int i = i0; i + 1 < nodes; ++i) {
    t.f11[i + 1] = t.f11[i] + integrate(g11, t.lam[i], t.lam[i + 1], tol);
    t.f12[i + 1] = t.f12[i] + integrate(g12, t.lam[i], t.lam[i + 1], tol);
    t.f22[i + 1] = t.f22[i] + integrate(g22, t.lam[i], t.lam[i + 1], tol);
  }
  for (int i = i0; i > 0; --i) {
    t.f11[i - 1] = t.f11[i] - integrate(g11, t.lam[i - 1], t.lam[i], tol);
    t.f12[i - 1] = t.f12[i] - integrate(g12, t.lam[i - 1], t.lam[i], tol);
    t.f22[i - 1] = t.f22[i] - integrate(g22, t.lam[i - 1], t.lam[i], tol);
  }
  return t;
}

double FijTable::interp(const std::vector<double>& v, double l) const {
  const int n = static_cast<int>(lam.size());
  double s = (l - lo) / (hi - lo) * (n - 1);
  s = std::max(0.0, std::min(double(n - 1), s));
  const int i = std::min(n - 2, int(s));
  const double frac = s - i;
  return (1.0 - frac) * v[i] + frac * v[i + 1];
}

SplitReport entropy_production_split(const SpaceTimeField& field, const ProblemSpec& spec,
                                     const EstimateTrace& trace, const SmoothEntropyPair& eta,
                                     double energy_bound1) {
  const double A = spec.bound_A();
  const double Bmax = spec.viscosity.max_on(-A, A);
  double etap_sup = 0.0, etapp_sup = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double z = -A + 2.0 * A * i / 9999.0;
    etap_sup = std::max(etap_sup, std::abs(eta.eta_p(z)));
    etapp_sup = std::max(etapp_sup, eta.eta_pp(z));
  }
  etapp_sup = std::max(etapp_sup, eta.eta_pp(eta.k));

  SplitReport rep;
  const double grad_l2 = std::sqrt(std::max(0.0, trace.eps_grad_sq / field.eps));
  rep.vanishing_bound = field.eps * Bmax * etap_sup * grad_l2;

  // int int eps sum_j B(u) (d_j u)^2 |eta''(u)| on the stored slices
  std::vector<double> wt(field.nt(), 0.0);
  for (int n = 0; n + 1 < field.nt(); ++n) {
    const double dt = field.times[n + 1] - field.times[n];
    wt[n] += 0.5 * dt;
    wt[n + 1] += 0.5 * dt;
  }
  double acc = 0.0;
  for (int n = 0; n < field.nt(); ++n) {
    double s = 0.0;
    for (int j = 0; j < field.ny; ++j)
      for (int i = 0; i < field.nx; ++i) {
        const double u = field.at(n, i, j);
        double gsq = 0.0;
        {
          double gx;
          if (i == 0) gx = (field.at(n, 1, j) - field.at(n, 0, j)) / field.hx;
          else if (i == field.nx - 1)
            gx = (field.at(n, field.nx - 1, j) - field.at(n, field.nx - 2, j)) / field.hx;
          else gx = (field.at(n, i + 1, j) - field.at(n, i - 1, j)) / (2.0 * field.hx);
          gsq += gx * gx;
        }
        if (field.dim == 2) {
          double gy;
          if (j == 0) gy = (field.at(n, i, 1) - field.at(n, i, 0)) / field.hy;
          else if (j == field.ny - 1)
            gy = (field.at(n, i, field.ny - 1) - field.at(n, i, field.ny - 2)) / field.hy;
          else gy = (field.at(n, i, j + 1) - field.at(n, i, j - 1)) / (2.0 * field.hy);
          gsq += gy * gy;
        }
        s += spec.viscosity.B(u) * gsq * eta.eta_pp(u);
      }
    acc += s * field.cell_volume() * wt[n];
  }
  rep.measure_part = field.eps * acc;
  rep.measure_bound = energy_bound1 * Bmax * etapp_sup;
  rep.measure_pass = rep.measure_part <= 1.05 * rep.measure_bound;
  return rep;
}

namespace {

// L1-over-macro-cells defect of <P> - G(<v1>,...,<vk>) for up to three fields
struct MacroAccum {
  double s1 = 0, s2 = 0, s3 = 0, sp = 0;
  long count = 0;
};

}  // namespace

DefectSequence divcurl_defect(const std::vector<const SpaceTimeField*>& sweep,
                              const FluxModel& flux2d, int macro) {
  if (sweep.empty()) return {};
  const SpaceTimeField& f0 = *sweep.front();
  if (f0.dim != 2) throw std::invalid_argument("divcurl_defect: needs d=2 fields");
  for (const auto* f : sweep)
    if (f->nx != f0.nx || f->ny != f0.ny || f->nt() != f0.nt() ||
        std::abs(f->hx - f0.hx) > 1e-14 || std::abs(f->hy - f0.hy) > 1e-14)
      throw std::invalid_argument("divcurl_defect: sweep fields must share a common grid");

  double amax = 0.0;
  for (const auto* f : sweep) amax = std::max(amax, f->max_abs());
  const FijTable tab = FijTable::build(flux2d, -amax - 0.1, amax + 0.1);

  DefectSequence seq;
  const int bx = f0.nx / macro, by = f0.ny / macro, bt = std::max(1, f0.nt() / macro);
  for (const auto* fp : sweep) {
    const SpaceTimeField& f = *fp;
    double defect = 0.0;
    for (int tb = 0; tb < bt; ++tb)
      for (int jb = 0; jb < by; ++jb)
        for (int ib = 0; ib < bx; ++ib) {
          MacroAccum a;
          for (int n = tb * macro; n < std::min(f.nt(), (tb + 1) * macro); ++n)
            for (int j = jb * macro; j < (jb + 1) * macro; ++j)
              for (int i = ib * macro; i < (ib + 1) * macro; ++i) {
                const double u = f.at(n, i, j);
                const double F11 = tab.F11(u), F12 = tab.F12(u), F22 = tab.F22(u);
                a.s1 += F11;
                a.s2 += F12;
                a.s3 += F22;
                a.sp += F11 * F22 - F12 * F12;
                ++a.count;
              }
          if (a.count == 0) continue;
          const double m1 = a.s1 / a.count, m2 = a.s2 / a.count, m3 = a.s3 / a.count;
          const double mp = a.sp / a.count;
          const double vol = a.count * f.cell_volume() * f.dt;
          defect += std::abs(mp - (m1 * m3 - m2 * m2)) * vol;
        }
    seq.eps.push_back(f.eps);
    seq.defect.push_back(defect);
  }
  return seq;
}

double tartar_commutation_defect(const SpaceTimeField& field, const FluxModel& flux, double k,
                                 int macro) {
  if (field.dim != 1) throw std::invalid_argument("tartar_commutation_defect: d=1 only");
  const int bx = field.nx / macro, bt = std::max(1, field.nt() / macro);
  double defect = 0.0;
  for (int tb = 0; tb < bt; ++tb)
    for (int ib = 0; ib < bx; ++ib) {
      double e1 = 0, q1 = 0, e2 = 0, q2 = 0, p = 0;
      long count = 0;
      for (int n = tb * macro; n < std::min(field.nt(), (tb + 1) * macro); ++n)
        for (int i = ib * macro; i < (ib + 1) * macro; ++i) {
          const double u = field.at(n, i, 0);
          const double eta1 = u, qf1 = flux.f(0, u);
          const double eta2 = std::abs(u - k);
          const double qf2 = sg(u - k) * (flux.f(0, u) - flux.f(0, k));
          e1 += eta1;
          q1 += qf1;
          e2 += eta2;
          q2 += qf2;
          p += eta1 * qf2 - eta2 * qf1;
          ++count;
        }
      if (count == 0) continue;
      const double vol = count * field.cell_volume() * field.dt;
      defect += std::abs(p / count - (e1 * q2 - e2 * q1) / double(count) / double(count)) * vol;
    }
  return defect;
}

}  // namespace viscolimit
