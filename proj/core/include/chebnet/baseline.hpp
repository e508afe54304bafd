#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chebnet/evolve.hpp"

namespace chebnet {

/// Result of a comparison calculation: the winning individual plus every
/// (parameter, fitness) pair that was tried. For lots the parameter is the
/// draw index, for sweeps the relative guideline angle in radians.
struct BaselineResult {
  enum class Method { lots, sweep };
  Method method = Method::lots;
  Individual best;
  std::vector<std::pair<double, double>> all_values;
};

/// Draw n_draws random genomes (same generator and bounds as the GA) and
/// keep the best. Invalid draws stay in the record with the +inf sentinel.
/// Draw i always comes from its own RNG stream, so a longer run extends a
/// shorter one with the same seed.
BaselineResult random_lots(const SurfaceSpec& spec, double w, const GAConfig& config,
                           int n_draws = 10000);

/// Trial-and-error sweep: for each relative angle phi, evaluate the genome
/// with A fixed, alpha1 = alpha1_offset, beta1 = alpha1 + phi, antipodal
/// alpha2/beta2 and all turns zero. Deterministic and RNG-free.
BaselineResult angle_sweep(const SurfaceSpec& spec, double w,
                           std::span<const double> relative_angles,
                           std::pair<double, double> fixed_a, const GAConfig& config,
                           double alpha1_offset = 0.0);

/// Straight-guideline genome used by the sweep (also handy for direct maps).
Genome straight_genome(std::pair<double, double> a, double alpha1, double beta1,
                       const std::array<std::size_t, 4>& turn_counts);

/// The default trial grid: 10 deg to 170 deg in 5 deg steps, in radians.
std::vector<double> default_sweep_angles();

}  // namespace chebnet
