#include "chebnet/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "chebnet/baseline.hpp"
#include "chebnet/io.hpp"

namespace chebnet {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

fs::path ensure_out_dir(const RunConfig& config) {
  fs::path dir(config.out_dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

int cmd_map(const RunConfig& config) {
  const SurfaceSpec spec = config.make_surface();
  const GAConfig ga = config.resolved_ga(spec);
  const Genome genome = config.resolve_genome(spec);
  const fs::path dir = ensure_out_dir(config);

  TchebychevNet net;
  try {
    net = map_surface(spec, genome, config.width);
  } catch (const MappingError& e) {
    std::cerr << "mapping failed: " << e.what() << "\n";
    return kExitInvalidNet;
  }

  const ValidityReport validity = validate_net(net, spec, config.width, ga.validity);
  const NetStats stats = net_stats(net, ga.top_fraction);

  write_file(dir / "net.obj", export_obj(net, spec.name(), genome_digest(genome)));
  write_file(dir / "nodes.csv", node_table_csv(net));
  write_file(dir / "stats.json", stats_json(stats, validity));
  write_file(dir / "genome.json", genome_json(genome));

  if (!validity.complete || !validity.overlap_free) {
    for (const auto& m : validity.messages) std::cerr << "invalid net: " << m << "\n";
    return kExitInvalidNet;
  }
  std::cout << "mapped " << net.size() << " nodes, c_max " << format_double(stats.c_max) << "\n";
  return kExitOk;
}

int cmd_optimize(const RunConfig& config) {
  const SurfaceSpec spec = config.make_surface();
  const GAConfig ga = config.resolved_ga(spec);
  const fs::path dir = ensure_out_dir(config);

  RunReport report;
  try {
    report = evolve_run(spec, config.width, ga);
  } catch (const InitializationError& e) {
    std::cerr << "initialization failed: " << e.what() << "\n";
    return kExitInitFailure;
  }

  write_file(dir / "history.csv", history_csv(report));
  write_file(dir / "best_genome.json", genome_json(report.best.genome));
  write_file(dir / "report.json", run_report_json(report));
  if (config.plot) write_file(dir / "history.svg", history_svg(report));

  const TchebychevNet net = map_surface(spec, report.best.genome, config.width);
  write_file(dir / "best_net.obj",
             export_obj(net, spec.name(), genome_digest(report.best.genome)));

  std::cout << (report.converged ? "converged" : "generation cap reached") << " after "
            << report.generations_run << " generations, best fitness "
            << format_double(report.best.fitness) << "\n";
  return kExitOk;
}

int cmd_baseline(const RunConfig& config) {
  const SurfaceSpec spec = config.make_surface();
  const GAConfig ga = config.resolved_ga(spec);
  const fs::path dir = ensure_out_dir(config);

  BaselineResult result;
  if (config.baseline_method == "lots") {
    result = random_lots(spec, config.width, ga, config.n_draws);
  } else {
    std::vector<double> angles;
    for (double deg = config.sweep_from_deg; deg <= config.sweep_to_deg + 1e-9;
         deg += config.sweep_step_deg)
      angles.push_back(deg * kPi / 180.0);
    const Box3& box = spec.domain();
    const auto a = config.at.value_or(
        std::make_pair(0.5 * (box.x0 + box.x1), 0.5 * (box.y0 + box.y1)));
    result = angle_sweep(spec, config.width, angles, a, ga,
                         config.sweep_alpha1_deg * kPi / 180.0);
  }

  write_file(dir / "values.csv", values_csv(result));
  write_file(dir / "best_genome.json", genome_json(result.best.genome));
  if (std::isfinite(result.best.fitness)) {
    const TchebychevNet net = map_surface(spec, result.best.genome, config.width);
    write_file(dir / "best_net.obj",
               export_obj(net, spec.name(), genome_digest(result.best.genome)));
  } else {
    std::cerr << "every evaluation was invalid; no best net written\n";
  }

  std::cout << "best fitness " << format_double(result.best.fitness) << "\n";
  return kExitOk;
}

}  // namespace chebnet
