#include "viscolimit/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace viscolimit {

bool SpaceTimeField::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

double SpaceTimeField::max_abs() const {
  double m = 0.0;
  for (double v : data) m = std::max(m, std::abs(v));
  return m;
}

double SpaceTimeField::l1_distance_at(int n, const std::function<double(double, double)>& g) const {
  double s = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      s += std::abs(at(n, i, j) - g(x_center(i), y_center(j))) * cell_volume();
  return s;
}

void export_field_csv(const SpaceTimeField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write field CSV: " + path);
  char buf[160];
  out << (f.dim == 1 ? "t,x,u\n" : "t,x,y,u\n");
  for (int n = 0; n < f.nt(); ++n)
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i) {
        if (f.dim == 1)
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.times[n], f.x_center(i),
                        f.at(n, i, j));
        else
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", f.times[n], f.x_center(i),
                        f.y_center(j), f.at(n, i, j));
        out << buf;
      }
}

SpaceTimeField import_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field CSV: " + path);
  std::string header;
  std::getline(in, header);
  const int dim = header.find(",y,") != std::string::npos ? 2 : 1;

  struct Row { double t, x, y, u; };
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    std::vector<double> v;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (dim == 1 && v.size() == 3) rows.push_back({v[0], v[1], 0.0, v[2]});
    else if (dim == 2 && v.size() == 4) rows.push_back({v[0], v[1], v[2], v[3]});
    else throw std::runtime_error("field CSV: bad row: " + line);
  }
  if (rows.empty()) throw std::runtime_error("field CSV: no data rows");

  std::vector<double> ts, xs, ys;
  auto push_unique = [](std::vector<double>& v, double x) {
    for (double w : v)
      if (std::abs(w - x) <= 1e-12 * (1.0 + std::abs(x))) return;
    v.push_back(x);
  };
  for (const auto& r : rows) {
    push_unique(ts, r.t);
    push_unique(xs, r.x);
    if (dim == 2) push_unique(ys, r.y);
  }
  std::sort(ts.begin(), ts.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  SpaceTimeField f;
  f.dim = dim;
  f.nx = static_cast<int>(xs.size());
  f.ny = dim == 2 ? static_cast<int>(ys.size()) : 1;
  if (f.nx < 2 || ts.size() < 2) throw std::runtime_error("field CSV: grid too small");
  f.hx = xs[1] - xs[0];
  f.hy = dim == 2 ? ys[1] - ys[0] : 0.0;
  f.dt = ts[1] - ts[0];
  f.times = ts;
  f.domain = dim == 1 ? make_interval(xs.front() - 0.5 * f.hx, xs.back() + 0.5 * f.hx)
                      : make_rectangle(xs.front() - 0.5 * f.hx, xs.back() + 0.5 * f.hx,
                                       ys.front() - 0.5 * f.hy, ys.back() + 0.5 * f.hy);
  f.solver_id = "csv-import";
  f.data.assign(std::size_t(f.nt()) * f.nx * f.ny, 0.0);

  auto index_of = [](const std::vector<double>& v, double x) {
    int lo = 0, hi = static_cast<int>(v.size()) - 1;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (v[mid] < x - 1e-12 * (1.0 + std::abs(x))) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  };
  for (const auto& r : rows) {
    const int n = index_of(ts, r.t), i = index_of(xs, r.x);
    const int j = dim == 2 ? index_of(ys, r.y) : 0;
    f.at(n, i, j) = r.u;
  }
  if (!f.all_finite()) throw std::runtime_error("field CSV: non-finite values");
  return f;
}

void export_run_manifest(const SpaceTimeField& f, const std::string& path,
                         const std::vector<std::pair<std::string, double>>& summaries) {
  nlohmann::json j;
  j["dim"] = f.dim;
  j["nx"] = f.nx;
  if (f.dim == 2) j["ny"] = f.ny;
  j["h"] = f.hx;
  if (f.dim == 2) j["hy"] = f.hy;
  j["dt_stored"] = f.dt;
  j["eps"] = f.eps;
  j["nt"] = f.nt();
  j["solver"] = f.solver_id;
  j["scheme"] = f.scheme_id;
  nlohmann::json s = nlohmann::json::object();
  for (const auto& [k, v] : summaries) s[k] = v;
  j["estimates"] = s;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace viscolimit
