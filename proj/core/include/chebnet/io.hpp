#pragma once

#include <string>

#include "chebnet/baseline.hpp"
#include "chebnet/evolve.hpp"
#include "chebnet/net.hpp"

namespace chebnet {

/// Wavefront OBJ text for a net: one `v` per node sorted by (i, j), one `l`
/// per maximal bar polyline in each family, with a comment header recording
/// the mesh width, surface and genome digest. Throws on an empty net.
std::string export_obj(const TchebychevNet& net, const std::string& surface_name,
                       const std::string& genome_digest);

/// "i,j,x,y,z,status" table, nodes sorted by (i, j).
std::string node_table_csv(const TchebychevNet& net);

/// "generation,best,mean" per-generation history.
std::string history_csv(const RunReport& report);

/// "parameter,fitness" rows; sweep parameters are written in degrees.
std::string values_csv(const BaselineResult& result);

/// Mapping statistics + validity as a JSON object.
std::string stats_json(const NetStats& stats, const ValidityReport& validity);

std::string genome_json(const Genome& genome);
Genome genome_from_json(const std::string& text);  // throws std::runtime_error on bad input

/// Run summary: outcome, best fitness/genome, per-generation history.
std::string run_report_json(const RunReport& report);

/// Line plot of best/mean fitness per generation; plain SVG, no dependencies.
std::string history_svg(const RunReport& report);

/// FNV-1a digest of the genome's raw values, as 16 hex digits.
std::string genome_digest(const Genome& genome);

/// Shortest round-trip decimal form of v (std::to_chars).
std::string format_double(double v);

}  // namespace chebnet
