#include "chebnet/baseline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chebnet/parallel.hpp"
#include "chebnet/rng.hpp"

namespace chebnet {

namespace {
constexpr std::uint64_t kLotsDomain = 3;
}

BaselineResult random_lots(const SurfaceSpec& spec, double w, const GAConfig& config,
                           int n_draws) {
  if (n_draws < 1) throw std::invalid_argument("random_lots: n_draws must be >= 1");

  std::vector<double> fitness(static_cast<std::size_t>(n_draws));
  parallel_for(fitness.size(), config.threads, [&](std::size_t i) {
    std::mt19937_64 rng = make_stream(config.seed, kLotsDomain, i);
    fitness[i] = fitness_eval(spec, random_genome(config, rng), w, config);
  });

  BaselineResult result;
  result.method = BaselineResult::Method::lots;
  result.all_values.reserve(fitness.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    result.all_values.emplace_back(static_cast<double>(i), fitness[i]);
    if (fitness[i] < fitness[best]) best = i;
  }
  std::mt19937_64 rng = make_stream(config.seed, kLotsDomain, best);
  result.best = {random_genome(config, rng), fitness[best]};
  return result;
}

Genome straight_genome(std::pair<double, double> a, double alpha1, double beta1,
                       const std::array<std::size_t, 4>& turn_counts) {
  Genome g;
  g.x_a = a.first;
  g.y_a = a.second;
  g.alpha1 = wrap_angle(alpha1);
  g.alpha2 = wrap_angle(alpha1 + kPi);
  g.beta1 = wrap_angle(beta1);
  g.beta2 = wrap_angle(beta1 + kPi);
  g.gamma1.assign(turn_counts[0], 0.0);
  g.gamma2.assign(turn_counts[1], 0.0);
  g.eps1.assign(turn_counts[2], 0.0);
  g.eps2.assign(turn_counts[3], 0.0);
  return g;
}

BaselineResult angle_sweep(const SurfaceSpec& spec, double w,
                           std::span<const double> relative_angles,
                           std::pair<double, double> fixed_a, const GAConfig& config,
                           double alpha1_offset) {
  if (relative_angles.empty()) throw std::invalid_argument("angle_sweep: no angles given");

  std::vector<double> fitness(relative_angles.size());
  parallel_for(fitness.size(), config.threads, [&](std::size_t i) {
    const Genome g = straight_genome(fixed_a, alpha1_offset, alpha1_offset + relative_angles[i],
                                     config.turn_counts);
    fitness[i] = fitness_eval(spec, g, w, config);
  });

  BaselineResult result;
  result.method = BaselineResult::Method::sweep;
  result.all_values.reserve(fitness.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    result.all_values.emplace_back(relative_angles[i], fitness[i]);
    if (fitness[i] < fitness[best]) best = i;
  }
  result.best = {straight_genome(fixed_a, alpha1_offset, alpha1_offset + relative_angles[best],
                                 config.turn_counts),
                 fitness[best]};
  return result;
}

std::vector<double> default_sweep_angles() {
  std::vector<double> angles;
  for (int deg = 10; deg <= 170; deg += 5) angles.push_back(deg * kPi / 180.0);
  return angles;
}

}  // namespace chebnet
