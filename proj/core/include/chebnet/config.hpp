#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebnet/evolve.hpp"
#include "chebnet/genome.hpp"
#include "chebnet/surface.hpp"

namespace chebnet {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One full run description: surface source, mesh width, GA and baseline
/// parameters, output location. Built from a config file and/or command-line
/// flags; flags win. Exactly one surface source must be set.
struct RunConfig {
  // surface
  std::string surface_name;           // catalog entry, e.g. "hemisphere"
  std::vector<double> surface_params; // catalog parameters
  std::string expr_text;              // alternative: Cartesian expression F(x,y,z)
  std::optional<Box3> domain;         // overrides the catalog default; required for expr
  double eval_tol = SurfaceSpec::kDefaultEvalTol;

  double width = 1.0;
  GAConfig ga;
  /// Explicit seed box; when absent the central 20% of the domain's (x,y)
  /// extent is used (for the default hemisphere that is the box (-2..2)^2).
  std::optional<Rect> seed_box;

  // map subcommand
  std::string genome_file;  // JSON genome; empty = use the explicit fields below
  std::optional<std::pair<double, double>> at;  // seed point A; default = domain center
  std::optional<double> alpha1, alpha2, beta1, beta2;
  std::vector<double> turns1, turns2, turns3, turns4;  // explicit per-branch turn lists
  std::optional<int> steps;  // straight-guideline branch length shortcut

  // baseline subcommand
  std::string baseline_method = "lots";  // "lots" or "sweep"
  int n_draws = 10000;
  double sweep_from_deg = 10.0, sweep_to_deg = 170.0, sweep_step_deg = 5.0;
  double sweep_alpha1_deg = 0.0;

  // output
  std::string out_dir = "out";
  bool plot = false;

  /// Key = value assignment, shared by the config-file parser and the CLI
  /// flag handlers. Keys mirror the long flag names ("pop", "pm", ...).
  void set(const std::string& key, const std::string& value);

  /// Build the surface from whichever source is configured.
  SurfaceSpec make_surface() const;

  /// GA config with the seed box resolved against the surface domain.
  GAConfig resolved_ga(const SurfaceSpec& spec) const;

  /// Resolve the genome for `map`: genome file if given, else the explicit
  /// angle fields over straight orthogonal defaults through the domain center.
  Genome resolve_genome(const SurfaceSpec& spec) const;

  void check() const;  // throws ConfigError
};

/// Parse a flat "key = value" file with optional [section] headers (sections
/// are cosmetic; keys are globally unique) and '#' comments.
RunConfig load_config_file(const std::string& path);

/// Apply one file's worth of text to an existing config (for tests).
void apply_config_text(RunConfig& config, const std::string& text);

}  // namespace chebnet
