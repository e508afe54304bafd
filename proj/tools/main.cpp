// chebnet: map Tchebychev nets onto implicit surfaces with the compass
// method and optimize guideline orientation with a genetic algorithm.
//
// Subcommands: map, optimize, baseline. All angles on the command line and
// in config files are in degrees; genome JSON files use radians.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebnet/commands.hpp"
#include "chebnet/expr.hpp"

namespace {

struct FlagSpec {
  const char* key;
  const char* flag;
  const char* help;
};

// Every option funnels through RunConfig::set so config files and flags
// cannot drift apart. Flags are applied after the file, so flags win.
const std::vector<FlagSpec> kCommonFlags = {
    {"surface", "--surface", "catalog surface, name or name:p1,p2,... "
                             "(plane, hemisphere, sinusoid, hypar, ellipsoid, torus, scherk)"},
    {"expr", "--expr", "implicit surface expression F(x,y,z), e.g. \"z - (x^2 - y^2)\""},
    {"domain", "--domain", "domain box x0,x1,y0,y1,z0,z1 (required with --expr)"},
    {"eval-tol", "--eval-tol", "absolute on-surface tolerance on |F|"},
    {"width", "--width", "mesh width w"},
    {"pop", "--pop", "GA population size"},
    {"tournament", "--tournament", "tournament size n_can"},
    {"pc", "--pc", "crossover probability"},
    {"pm", "--pm", "mutation probability"},
    {"eps", "--eps", "convergence threshold on relative best-fitness change"},
    {"patience", "--patience", "consecutive flat generations required to stop"},
    {"max-gens", "--max-gens", "generation cap"},
    {"seed", "--seed", "RNG seed"},
    {"fitness", "--fitness", "fitness kind: max | mean | top:<p>"},
    {"turn-max", "--turn-max", "bound on turn-angle genes, degrees"},
    {"turn-counts", "--turn-counts", "turn genes per branch, 4 integers (default 11,11,11,11)"},
    {"seed-box", "--seed-box", "seed point box x0,x1,y0,y1"},
    {"anchor-opposite", "--anchor-opposite", "keep alpha2/beta2 near the antipode (true/false)"},
    {"coverage-threshold", "--coverage-threshold", "completeness threshold on coverage ratio"},
    {"proximity-factor", "--proximity-factor", "overlap distance factor (times w)"},
    {"threads", "--threads", "worker thread cap (0 = hardware)"},
    {"out", "--out", "output directory"},
    {"plot", "--plot", "write history.svg (true/false)"},
};

const std::vector<FlagSpec> kMapFlags = {
    {"genome", "--genome", "genome JSON file"},
    {"at", "--at", "seed point x,y (default: domain center)"},
    {"alpha1", "--alpha1", "first guideline right azimuth, degrees"},
    {"alpha2", "--alpha2", "first guideline left azimuth, degrees"},
    {"beta1", "--beta1", "second guideline top azimuth, degrees"},
    {"beta2", "--beta2", "second guideline bottom azimuth, degrees"},
    {"turns1", "--turns1", "turn list for the alpha1 branch, degrees"},
    {"turns2", "--turns2", "turn list for the alpha2 branch, degrees"},
    {"turns3", "--turns3", "turn list for the beta1 branch, degrees"},
    {"turns4", "--turns4", "turn list for the beta2 branch, degrees"},
    {"steps", "--steps", "straight-guideline branch length"},
};

const std::vector<FlagSpec> kBaselineFlags = {
    {"method", "--method", "lots | sweep"},
    {"draws", "--draws", "number of random draws for lots"},
    {"sweep-from", "--sweep-from", "sweep start angle, degrees"},
    {"sweep-to", "--sweep-to", "sweep end angle, degrees"},
    {"sweep-step", "--sweep-step", "sweep step, degrees"},
    {"sweep-alpha1", "--sweep-alpha1", "alpha1 offset of the sweep, degrees"},
    {"at", "--at", "fixed seed point x,y (default: domain center)"},
};

void add_flags(CLI::App* cmd, const std::vector<FlagSpec>& flags,
               std::vector<std::pair<std::string, std::string>>& assignments) {
  for (const auto& f : flags) {
    const std::string key = f.key;
    cmd->add_option_function<std::string>(
        f.flag,
        [key, &assignments](const std::string& value) { assignments.emplace_back(key, value); },
        f.help);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tchebychev nets on implicit surfaces: compass-method mapping "
               "and genetic optimization of bar orientation"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> assignments;

  auto* map_cmd = app.add_subcommand("map", "map one net and export it");
  auto* opt_cmd = app.add_subcommand("optimize", "run the genetic algorithm");
  auto* base_cmd = app.add_subcommand("baseline", "random lots or guideline-angle sweep");

  for (auto* cmd : {map_cmd, opt_cmd, base_cmd}) {
    cmd->add_option("--config", config_path, "key = value config file (flags win)");
    add_flags(cmd, kCommonFlags, assignments);
  }
  add_flags(map_cmd, kMapFlags, assignments);
  add_flags(base_cmd, kBaselineFlags, assignments);

  CLI11_PARSE(app, argc, argv);

  try {
    chebnet::RunConfig config;
    if (!config_path.empty()) config = chebnet::load_config_file(config_path);
    for (const auto& [key, value] : assignments) config.set(key, value);

    if (map_cmd->parsed()) return chebnet::cmd_map(config);
    if (opt_cmd->parsed()) return chebnet::cmd_optimize(config);
    return chebnet::cmd_baseline(config);
  } catch (const chebnet::ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return chebnet::kExitConfig;
  } catch (const chebnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return chebnet::kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return chebnet::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
