#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "viscolimit/config.hpp"
#include "viscolimit/field.hpp"
#include "viscolimit/sweep.hpp"

namespace {

std::string output_root(const std::string& config_dir) {
  if (const char* env = std::getenv("VISCOLIMIT_OUT")) return env;
  return config_dir;
}

void print_verdict(const viscolimit::SweepReport& rep) {
  for (const auto& [name, c] : rep.verdict)
    std::printf("%-34s %s  value=%.6g bound=%.6g tol=%.6g\n", name.c_str(),
                c.pass ? "pass" : "FAIL", c.value, c.bound, c.tol);
  std::printf("verdict: %s\n", rep.pass ? "pass" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"viscolimit: vanishing-viscosity solver and entropy-solution verifier"};
  app.require_subcommand(1);

  std::string config_path, field_path;

  auto* run = app.add_subcommand("run", "run an eps-sweep from a JSON config");
  run->add_option("config", config_path, "sweep config (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "verify a stored field CSV against a config");
  verify->add_option("field", field_path, "field CSV (t,x[,y],u)")->required();
  verify->add_option("config", config_path, "sweep config (JSON)")->required();

  auto* catalog = app.add_subcommand("catalog", "list built-in fluxes, viscosities and data");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto cfg = viscolimit::SweepConfig::from_json_file(config_path);
      const auto rep = viscolimit::run_sweep(cfg);
      const auto dir = output_root(cfg.output_dir);
      viscolimit::emit_report(rep, dir);
      std::printf("wrote %s/sweep.csv and verdict.json\n", dir.c_str());
      print_verdict(rep);
      return rep.pass ? 0 : 1;
    }
    if (verify->parsed()) {
      const auto cfg = viscolimit::SweepConfig::from_json_file(config_path);
      const auto field = viscolimit::import_field_csv(field_path);
      const auto rep = viscolimit::verify_field(field, cfg);
      print_verdict(rep);
      return rep.pass ? 0 : 1;
    }
    if (catalog->parsed()) {
      std::puts("fluxes:      burgers | linear(a) | cubic | power-mix-2d | polynomial(coeffs)");
      std::puts("viscosities: unit | constant(value) | two-plus-sin   (B = 2 + sin u, r = 1)");
      std::puts("initial:     constant(value) | riemann(uL,uR,x0) | sine(amplitude) |");
      std::puts("             bv-step(x0) | csv(path: columns x[,y],u)");
      std::puts("config keys: schema_version problem domain T flux viscosity initial eps_list");
      std::puts("             grid{n_finest,coupling} checks seeds tolerances workers output_dir");
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
