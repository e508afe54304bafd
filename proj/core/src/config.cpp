#include "chebnet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chebnet/io.hpp"

namespace chebnet {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_num(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': '" + value + "'");
  }
}

long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("bad boolean value for '" + key + "': '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_num(key, item));
  }
  return out;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "surface") {
    // name or name:p1,p2,...
    const auto colon = value.find(':');
    surface_name = trim(value.substr(0, colon));
    surface_params =
        colon == std::string::npos ? std::vector<double>{} : parse_list(key, value.substr(colon + 1));
  } else if (key == "expr") {
    expr_text = value;
  } else if (key == "domain") {
    const auto v = parse_list(key, value);
    if (v.size() != 6) throw ConfigError("domain needs 6 numbers: x0,x1,y0,y1,z0,z1");
    domain = Box3{v[0], v[1], v[2], v[3], v[4], v[5]};
  } else if (key == "eval-tol") {
    eval_tol = parse_num(key, value);
  } else if (key == "width") {
    width = parse_num(key, value);
  } else if (key == "pop") {
    ga.n_pop = static_cast<int>(parse_int(key, value));
  } else if (key == "tournament") {
    ga.n_can = static_cast<int>(parse_int(key, value));
  } else if (key == "pc") {
    ga.p_c = parse_num(key, value);
  } else if (key == "pm") {
    ga.p_m = parse_num(key, value);
  } else if (key == "eps") {
    ga.eps_conv = parse_num(key, value);
  } else if (key == "patience") {
    ga.patience = static_cast<int>(parse_int(key, value));
  } else if (key == "max-gens") {
    ga.max_generations = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    ga.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "fitness") {
    if (value == "max") {
      ga.fitness_kind = FitnessKind::max;
    } else if (value == "mean") {
      ga.fitness_kind = FitnessKind::mean;
    } else if (value.rfind("top:", 0) == 0) {
      ga.fitness_kind = FitnessKind::top_fraction;
      ga.top_fraction = parse_num(key, value.substr(4));
    } else {
      throw ConfigError("fitness must be max, mean or top:<p>");
    }
  } else if (key == "turn-max") {
    ga.turn_max = parse_num(key, value) * kPi / 180.0;
  } else if (key == "turn-counts") {
    const auto v = parse_list(key, value);
    if (v.size() != 4) throw ConfigError("turn-counts needs 4 integers");
    for (std::size_t b = 0; b < 4; ++b) ga.turn_counts[b] = static_cast<std::size_t>(v[b]);
  } else if (key == "seed-box") {
    const auto v = parse_list(key, value);
    if (v.size() != 4) throw ConfigError("seed-box needs 4 numbers: x0,x1,y0,y1");
    seed_box = Rect{v[0], v[1], v[2], v[3]};
  } else if (key == "anchor-opposite") {
    ga.anchor_opposite = parse_bool(key, value);
  } else if (key == "coverage-threshold") {
    ga.validity.coverage_threshold = parse_num(key, value);
  } else if (key == "proximity-factor") {
    ga.validity.proximity_factor = parse_num(key, value);
  } else if (key == "threads") {
    ga.threads = static_cast<int>(parse_int(key, value));
  } else if (key == "genome") {
    genome_file = value;
  } else if (key == "at") {
    const auto v = parse_list(key, value);
    if (v.size() != 2) throw ConfigError("at needs 2 numbers: x,y");
    at = std::make_pair(v[0], v[1]);
  } else if (key == "alpha1") {
    alpha1 = parse_num(key, value) * kPi / 180.0;
  } else if (key == "alpha2") {
    alpha2 = parse_num(key, value) * kPi / 180.0;
  } else if (key == "beta1") {
    beta1 = parse_num(key, value) * kPi / 180.0;
  } else if (key == "beta2") {
    beta2 = parse_num(key, value) * kPi / 180.0;
  } else if (key == "turns1" || key == "turns2" || key == "turns3" || key == "turns4") {
    auto v = parse_list(key, value);
    for (double& t : v) t *= kPi / 180.0;
    (key == "turns1" ? turns1 : key == "turns2" ? turns2 : key == "turns3" ? turns3 : turns4) =
        std::move(v);
  } else if (key == "steps") {
    steps = static_cast<int>(parse_int(key, value));
  } else if (key == "method") {
    if (value != "lots" && value != "sweep") throw ConfigError("method must be lots or sweep");
    baseline_method = value;
  } else if (key == "draws") {
    n_draws = static_cast<int>(parse_int(key, value));
  } else if (key == "sweep-from") {
    sweep_from_deg = parse_num(key, value);
  } else if (key == "sweep-to") {
    sweep_to_deg = parse_num(key, value);
  } else if (key == "sweep-step") {
    sweep_step_deg = parse_num(key, value);
  } else if (key == "sweep-alpha1") {
    sweep_alpha1_deg = parse_num(key, value);
  } else if (key == "out") {
    out_dir = value;
  } else if (key == "plot") {
    plot = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void RunConfig::check() const {
  const bool have_catalog = !surface_name.empty();
  const bool have_expr = !expr_text.empty();
  if (have_catalog == have_expr)
    throw ConfigError("exactly one of surface/expr must be set");
  if (have_expr && !domain) throw ConfigError("expression surfaces need an explicit domain");
  if (width <= 0) throw ConfigError("width must be positive");
}

SurfaceSpec RunConfig::make_surface() const {
  check();
  SurfaceSpec spec = expr_text.empty()
                         ? SurfaceSpec::catalog(surface_name, surface_params, domain, eval_tol)
                         : SurfaceSpec::from_expression(Expr::parse(expr_text), *domain, eval_tol);
  const Box3& box = spec.domain();
  if (width >= std::min(box.x_extent(), box.y_extent()))
    throw ConfigError("width must be smaller than the domain's shortest x/y extent");
  return spec;
}

GAConfig RunConfig::resolved_ga(const SurfaceSpec& spec) const {
  GAConfig resolved = ga;
  if (seed_box) {
    resolved.seed_box = *seed_box;
  } else {
    const Box3& box = spec.domain();
    const double cx = 0.5 * (box.x0 + box.x1), cy = 0.5 * (box.y0 + box.y1);
    const double hx = 0.1 * box.x_extent(), hy = 0.1 * box.y_extent();
    resolved.seed_box = Rect{cx - hx, cx + hx, cy - hy, cy + hy};
  }
  return resolved;
}

Genome RunConfig::resolve_genome(const SurfaceSpec& spec) const {
  if (!genome_file.empty()) {
    std::ifstream in(genome_file);
    if (!in) throw ConfigError("cannot open genome file '" + genome_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return genome_from_json(buffer.str());
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
  }

  Genome g;
  const Box3& box = spec.domain();
  const auto a = at.value_or(std::make_pair(0.5 * (box.x0 + box.x1), 0.5 * (box.y0 + box.y1)));
  g.x_a = a.first;
  g.y_a = a.second;
  g.alpha1 = wrap_angle(alpha1.value_or(0.0));
  g.alpha2 = wrap_angle(alpha2.value_or(g.alpha1 + kPi));
  g.beta1 = wrap_angle(beta1.value_or(g.alpha1 + kPi / 2));
  g.beta2 = wrap_angle(beta2.value_or(g.beta1 + kPi));

  const std::size_t n = static_cast<std::size_t>(
      steps.value_or(static_cast<int>(ga.turn_counts[0]) + 1) - 1);
  g.gamma1 = turns1.empty() ? std::vector<double>(n, 0.0) : turns1;
  g.gamma2 = turns2.empty() ? std::vector<double>(n, 0.0) : turns2;
  g.eps1 = turns3.empty() ? std::vector<double>(n, 0.0) : turns3;
  g.eps2 = turns4.empty() ? std::vector<double>(n, 0.0) : turns4;
  return g;
}

void apply_config_text(RunConfig& config, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": bad section header");
      continue;  // sections are organizational only
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunConfig config;
  apply_config_text(config, buffer.str());
  return config;
}

}  // namespace chebnet
