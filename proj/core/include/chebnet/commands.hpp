#pragma once

#include "chebnet/config.hpp"

namespace chebnet {

// Exit codes shared by the CLI: 0 ok, 2 config/parse error, 3 invalid net,
// 4 optimizer initialization failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInvalidNet = 3;
inline constexpr int kExitInitFailure = 4;

/// Map one genome onto the surface and write net.obj, nodes.csv and
/// stats.json into the output directory. Returns kExitInvalidNet when the
/// net is incomplete or overlapping (files are still written).
int cmd_map(const RunConfig& config);

/// Run the GA and write history.csv, best_genome.json, best_net.obj,
/// report.json and (optionally) history.svg.
int cmd_optimize(const RunConfig& config);

/// Run the lots or sweep baseline and write values.csv, best_genome.json and
/// best_net.obj.
int cmd_baseline(const RunConfig& config);

}  // namespace chebnet
