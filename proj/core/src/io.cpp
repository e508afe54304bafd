#include "chebnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace chebnet {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string genome_digest(const Genome& g) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  auto mix = [&h](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xFF;
      h *= 0x100000001B3ull;
    }
  };
  mix(g.x_a);
  mix(g.y_a);
  mix(g.alpha1);
  mix(g.alpha2);
  mix(g.beta1);
  mix(g.beta2);
  for (const auto* turns : {&g.gamma1, &g.gamma2, &g.eps1, &g.eps2})
    for (const double t : *turns) mix(t);

  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string export_obj(const TchebychevNet& net, const std::string& surface_name,
                       const std::string& digest) {
  if (net.empty()) throw std::invalid_argument("export_obj: net is empty");

  std::string out;
  out += "# tchebychev net\n";
  out += "# width " + format_double(net.width()) + "\n";
  out += "# surface " + surface_name + "\n";
  out += "# genome " + digest + "\n";

  // Vertices in (i, j) order; remember each node's 1-based OBJ index.
  std::map<GridIndex, int> obj_index;
  int next = 1;
  for (const auto& [idx, node] : net) {
    obj_index[idx] = next++;
    out += "v " + format_double(node.pos.x) + " " + format_double(node.pos.y) + " " +
           format_double(node.pos.z) + "\n";
  }

  // Maximal polylines: first family follows increasing i per j, second
  // increasing j per i. Runs shorter than two nodes carry no bar.
  auto emit_runs = [&](bool along_i) {
    std::map<int, std::vector<GridIndex>> lines;
    for (const auto& [idx, node] : net) lines[along_i ? idx.j : idx.i].push_back(idx);
    for (auto& [line, ids] : lines) {
      std::sort(ids.begin(), ids.end(), [&](const GridIndex& a, const GridIndex& b) {
        return (along_i ? a.i : a.j) < (along_i ? b.i : b.j);
      });
      std::size_t run_start = 0;
      for (std::size_t k = 1; k <= ids.size(); ++k) {
        const bool contiguous =
            k < ids.size() && (along_i ? ids[k].i == ids[k - 1].i + 1 : ids[k].j == ids[k - 1].j + 1);
        if (contiguous) continue;
        if (k - run_start >= 2) {
          out += "l";
          for (std::size_t r = run_start; r < k; ++r) out += " " + std::to_string(obj_index[ids[r]]);
          out += "\n";
        }
        run_start = k;
      }
    }
  };
  emit_runs(true);
  emit_runs(false);
  return out;
}

std::string node_table_csv(const TchebychevNet& net) {
  std::string out = "i,j,x,y,z,status\n";
  for (const auto& [idx, node] : net) {
    out += std::to_string(idx.i) + "," + std::to_string(idx.j) + "," + format_double(node.pos.x) +
           "," + format_double(node.pos.y) + "," + format_double(node.pos.z) + "," +
           (node.status == NodeStatus::ok ? "ok" : "boundary") + "\n";
  }
  return out;
}

std::string history_csv(const RunReport& report) {
  std::string out = "generation,best,mean\n";
  for (std::size_t g = 0; g < report.history.size(); ++g) {
    out += std::to_string(g + 1) + "," + format_double(report.history[g].best) + "," +
           format_double(report.history[g].mean) + "\n";
  }
  return out;
}

std::string values_csv(const BaselineResult& result) {
  const bool sweep = result.method == BaselineResult::Method::sweep;
  std::string out = sweep ? "angle_deg,fitness\n" : "draw,fitness\n";
  for (const auto& [param, fitness] : result.all_values) {
    const double shown = sweep ? param * 180.0 / kPi : param;
    out += format_double(shown) + "," + format_double(fitness) + "\n";
  }
  return out;
}

namespace {

json genome_to_value(const Genome& g) {
  json j;
  j["x_a"] = g.x_a;
  j["y_a"] = g.y_a;
  j["alpha1"] = g.alpha1;
  j["alpha2"] = g.alpha2;
  j["beta1"] = g.beta1;
  j["beta2"] = g.beta2;
  j["gamma1"] = g.gamma1;
  j["gamma2"] = g.gamma2;
  j["eps1"] = g.eps1;
  j["eps2"] = g.eps2;
  return j;
}

}  // namespace

std::string genome_json(const Genome& genome) { return genome_to_value(genome).dump(2) + "\n"; }

Genome genome_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("genome JSON: ") + e.what());
  }
  try {
    Genome g;
    g.x_a = j.at("x_a").get<double>();
    g.y_a = j.at("y_a").get<double>();
    g.alpha1 = j.at("alpha1").get<double>();
    g.alpha2 = j.at("alpha2").get<double>();
    g.beta1 = j.at("beta1").get<double>();
    g.beta2 = j.at("beta2").get<double>();
    g.gamma1 = j.at("gamma1").get<std::vector<double>>();
    g.gamma2 = j.at("gamma2").get<std::vector<double>>();
    g.eps1 = j.at("eps1").get<std::vector<double>>();
    g.eps2 = j.at("eps2").get<std::vector<double>>();
    return g;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("genome JSON: ") + e.what());
  }
}

std::string stats_json(const NetStats& stats, const ValidityReport& validity) {
  json j;
  j["c_max"] = stats.c_max;
  j["c_mean"] = stats.c_mean;
  j["c_top_mean"] = stats.c_top_mean;
  j["top_fraction"] = stats.top_fraction;
  j["node_count"] = stats.node_count;
  j["curvature_samples"] = stats.curvature_samples;
  j["max_edge_error"] = stats.max_edge_error;
  j["complete"] = validity.complete;
  j["overlap_free"] = validity.overlap_free;
  j["coverage_ratio"] = validity.coverage_ratio;
  j["min_clearance"] = validity.min_clearance;
  j["messages"] = validity.messages;
  return j.dump(2) + "\n";
}

std::string run_report_json(const RunReport& report) {
  json j;
  j["generations_run"] = report.generations_run;
  j["converged"] = report.converged;
  j["best_fitness"] = report.best.fitness;
  j["best_genome"] = genome_to_value(report.best.genome);
  json hist = json::array();
  for (const auto& g : report.history) hist.push_back({{"best", g.best}, {"mean", g.mean}});
  j["history"] = hist;
  return j.dump(2) + "\n";
}

std::string history_svg(const RunReport& report) {
  const int width = 640, height = 400;
  const int ml = 60, mr = 20, mt = 20, mb = 45;
  const double plot_w = width - ml - mr, plot_h = height - mt - mb;

  double vmax = 0.0;
  for (const auto& g : report.history) {
    if (std::isfinite(g.best)) vmax = std::max(vmax, g.best);
    if (std::isfinite(g.mean)) vmax = std::max(vmax, g.mean);
  }
  if (vmax <= 0.0) vmax = 1.0;
  vmax *= 1.05;
  const std::size_t n = std::max<std::size_t>(2, report.history.size());

  auto px = [&](std::size_t g) { return ml + plot_w * static_cast<double>(g) / static_cast<double>(n - 1); };
  auto py = [&](double v) { return mt + plot_h * (1.0 - v / vmax); };
  auto polyline = [&](const char* color, auto value_of) {
    std::string pts;
    for (std::size_t g = 0; g < report.history.size(); ++g) {
      const double v = value_of(report.history[g]);
      if (!std::isfinite(v)) continue;
      pts += format_double(px(g)) + "," + format_double(py(v)) + " ";
    }
    return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <rect x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(mt) + "\" width=\"" +
         format_double(plot_w) + "\" height=\"" + format_double(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += polyline("#d62728", [](const GenerationStats& g) { return g.mean; });
  svg += polyline("#1f77b4", [](const GenerationStats& g) { return g.best; });
  svg += "  <text x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(height - 12) +
         "\" font-size=\"12\">generation (1.." + std::to_string(report.history.size()) +
         ")</text>\n";
  svg += "  <text x=\"8\" y=\"" + std::to_string(mt + 12) + "\" font-size=\"12\">fitness, max " +
         format_double(vmax) + "</text>\n";
  svg += "  <text x=\"" + std::to_string(width - 150) + "\" y=\"" + std::to_string(mt + 14) +
         "\" font-size=\"12\" fill=\"#1f77b4\">best</text>\n";
  svg += "  <text x=\"" + std::to_string(width - 150) + "\" y=\"" + std::to_string(mt + 30) +
         "\" font-size=\"12\" fill=\"#d62728\">mean</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace chebnet
