#include "viscolimit/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace viscolimit {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
}

SpatialDomain parse_domain(const json& j) {
  reject_unknown(j, {"dim", "lo", "hi"}, "domain");
  const int dim = j.value("dim", 1);
  const auto lo = j.at("lo").get<std::vector<double>>();
  const auto hi = j.at("hi").get<std::vector<double>>();
  if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim)
    throw std::invalid_argument("config: domain lo/hi must have 'dim' entries");
  return dim == 1 ? make_interval(lo[0], hi[0]) : make_rectangle(lo[0], hi[0], lo[1], hi[1]);
}

FluxModel parse_flux(const json& j) {
  reject_unknown(j, {"name", "a", "coeffs"}, "flux");
  const std::string name = j.at("name").get<std::string>();
  if (name == "burgers") return make_flux_burgers();
  if (name == "linear") return make_flux_linear(j.at("a").get<double>());
  if (name == "cubic") return make_flux_cubic();
  if (name == "power-mix-2d") return make_flux_power_mix_2d();
  if (name == "polynomial")
    return make_flux_polynomial(j.at("coeffs").get<std::vector<double>>());
  throw std::invalid_argument("config: unknown flux '" + name + "'");
}

ViscosityModel parse_viscosity(const json& j) {
  reject_unknown(j, {"name", "value"}, "viscosity");
  const std::string name = j.at("name").get<std::string>();
  if (name == "unit") return make_viscosity_unit();
  if (name == "constant") return make_viscosity_constant(j.at("value").get<double>());
  if (name == "two-plus-sin") return make_viscosity_two_plus_sin();
  throw std::invalid_argument("config: unknown viscosity '" + name + "'");
}

InitialDatum parse_initial(const json& j, const SpatialDomain& dom) {
  reject_unknown(j, {"name", "value", "uL", "uR", "x0", "amplitude", "path"}, "initial");
  const std::string name = j.at("name").get<std::string>();
  if (name == "constant") return make_initial_constant(j.at("value").get<double>());
  if (name == "riemann")
    return make_initial_riemann(j.at("uL").get<double>(), j.at("uR").get<double>(),
                                j.at("x0").get<double>());
  if (name == "sine") return make_initial_sine(dom, j.at("amplitude").get<double>());
  if (name == "bv-step") return make_initial_bv_step(j.at("x0").get<double>());
  if (name == "csv") return make_initial_csv(j.at("path").get<std::string>(), dom);
  throw std::invalid_argument("config: unknown initial datum '" + name + "'");
}

}  // namespace

void SweepConfig::validate() const {
  domain.validate();
  if (!(T > 0.0)) throw std::invalid_argument("config: T must be positive");
  if (eps_list.empty()) throw std::invalid_argument("config: eps_list must be non-empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw std::invalid_argument("config: eps values must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("config: eps_list must be strictly decreasing");
  }
  if (n_finest < 16) throw std::invalid_argument("config: n_finest must be >= 16");
  if (flux.dim() != domain.dim) throw std::invalid_argument("config: flux/domain dimension mismatch");
}

SweepConfig SweepConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  reject_unknown(j,
                 {"schema_version", "problem", "domain", "T", "flux", "viscosity", "initial",
                  "eps_list", "grid", "checks", "seeds", "tolerances", "workers", "output_dir"},
                 "top level");

  SweepConfig c;
  c.schema_version = j.at("schema_version").get<int>();
  if (c.schema_version != 1)
    throw std::invalid_argument("config: unsupported schema_version");
  c.problem = j.value("problem", std::string("unnamed"));
  if (j.contains("domain")) c.domain = parse_domain(j.at("domain"));
  c.T = j.value("T", 0.3);
  if (j.contains("flux")) c.flux = parse_flux(j.at("flux"));
  if (j.contains("viscosity")) c.viscosity = parse_viscosity(j.at("viscosity"));
  if (j.contains("initial")) c.initial = parse_initial(j.at("initial"), c.domain);
  if (j.contains("eps_list")) c.eps_list = j.at("eps_list").get<std::vector<double>>();

  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    reject_unknown(g, {"n_finest", "coupling"}, "grid");
    c.n_finest = g.value("n_finest", 400);
    const std::string coupling = g.value("coupling", std::string("h-proportional-eps"));
    if (coupling == "h-proportional-eps") c.couple_h_to_eps = true;
    else if (coupling == "fixed") c.couple_h_to_eps = false;
    else throw std::invalid_argument("config: grid.coupling must be h-proportional-eps|fixed");
  }
  if (j.contains("checks")) {
    const auto& k = j.at("checks");
    reject_unknown(k, {"otto", "kinetic", "compactness", "estimates"}, "checks");
    c.checks.otto = k.value("otto", true);
    c.checks.kinetic = k.value("kinetic", true);
    c.checks.compactness = k.value("compactness", true);
    c.checks.estimates = k.value("estimates", true);
  }
  if (j.contains("seeds")) {
    const auto& s = j.at("seeds");
    reject_unknown(s, {"bumps", "bump_count", "kinetic_bump_count"}, "seeds");
    c.bump_seed = s.value("bumps", std::uint64_t(1234));
    c.bump_count = s.value("bump_count", 20);
    c.kinetic_bump_count = s.value("kinetic_bump_count", 10);
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    reject_unknown(t, {"c_init_trace", "c_interior", "c_boundary", "timederiv_ratio"},
                   "tolerances");
    c.tol.c_init_trace = t.value("c_init_trace", 10.0);
    c.tol.c_interior = t.value("c_interior", 10.0);
    c.tol.c_boundary = t.value("c_boundary", 1.0);
    c.tol.timederiv_ratio = t.value("timederiv_ratio", 3.0);
  }
  c.workers = j.value("workers", 0);
  c.output_dir = j.value("output_dir", std::string("out"));
  c.validate();
  return c;
}

SweepConfig SweepConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

}  // namespace viscolimit
