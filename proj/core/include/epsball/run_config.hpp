#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsball/expression.hpp"
#include "epsball/geometry.hpp"
#include "epsball/scheme.hpp"

namespace epsball {

enum class RunMode { Solve, Verify, Converge, Stability };

/// A fully validated batch-run description. Parsing is strict: unknown keys
/// are errors, and all problems are collected before giving up rather than
/// failing on the first.
struct RunConfig {
  RunMode mode = RunMode::Solve;

  DomainSpec domain;
  double delta = 0.0;

  double epsilon = 0.0;
  double beta = 0.0;

  Expression f;
  Expression g;
  std::optional<Expression> exact;  // required by converge mode

  SeedKind seed = SeedKind::FromAbove;
  std::string seed_field_path;
  double tol = 1e-8;
  int max_sweeps = 100000;
  SweepKind sweep = SweepKind::GaussSeidel;
  int threads = 1;

  std::string out_dir = ".";
  bool out_csv = true;
  bool out_json = true;
  bool out_pgm = false;
  bool out_grid = false;
  struct Slice {
    int axis = 2;
    std::int32_t index = 0;
  };
  std::vector<Slice> slices;

  std::vector<double> converge_epsilons;
  double converge_delta_factor = 0.25;

  std::vector<double> stability_betas;
  std::optional<double> stability_beta_limit;
  std::vector<double> stability_f_shifts;
  std::optional<double> stability_margin;
};

struct ParsedConfig {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;  // empty exactly when config is set
};

/// Parses and validates a JSON config document.
ParsedConfig parse_config(const std::string& json_text);

/// Executes one mode and writes its artifacts under config.out_dir.
/// Returns 0 on success, 1 on execution errors, 2 when a verify check fails.
int run(const RunConfig& config);

}  // namespace epsball
