// Batch front door: reads a JSON run configuration, applies command-line
// overrides, and dispatches one of the solve/verify/converge/stability modes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epsball/run_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"eps-ball finite-difference solver and theorem checks"};

  std::string config_path;
  std::string mode_override;
  std::string out_override;
  std::string seed_field_override;
  int threads = 0;
  double tol = 0.0;

  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--mode", mode_override, "override mode: solve|verify|converge|stability");
  app.add_option("--out", out_override, "override output directory");
  app.add_option("--threads", threads, "worker cap (1 = sequential reference)");
  app.add_option("--tol", tol, "override solver tolerance");
  app.add_option("--seed-field", seed_field_override,
                 "field CSV used as the solve seed (implies seed: given)");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config " << config_path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  epsball::ParsedConfig parsed = epsball::parse_config(buffer.str());
  if (!parsed.config) {
    std::cerr << "config errors (" << parsed.errors.size() << "):\n";
    for (const auto& e : parsed.errors) std::cerr << "  - " << e << "\n";
    return 1;
  }
  epsball::RunConfig cfg = std::move(*parsed.config);

  if (!mode_override.empty()) {
    if (mode_override == "solve")
      cfg.mode = epsball::RunMode::Solve;
    else if (mode_override == "verify")
      cfg.mode = epsball::RunMode::Verify;
    else if (mode_override == "converge")
      cfg.mode = epsball::RunMode::Converge;
    else if (mode_override == "stability")
      cfg.mode = epsball::RunMode::Stability;
    else {
      std::cerr << "error: unknown mode '" << mode_override << "'\n";
      return 1;
    }
  }
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (threads > 0) cfg.threads = threads;
  if (tol > 0.0) cfg.tol = tol;
  if (!seed_field_override.empty()) {
    cfg.seed = epsball::SeedKind::Given;
    cfg.seed_field_path = seed_field_override;
  }

  return epsball::run(cfg);
}
