#include "chebnet/evolve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "chebnet/parallel.hpp"
#include "chebnet/rng.hpp"

namespace chebnet {

namespace {

constexpr double kInvalid = std::numeric_limits<double>::infinity();

// RNG stream domains; each (domain, index) pair owns an independent stream.
constexpr std::uint64_t kInitDomain = 1;
constexpr std::uint64_t kBreedDomain = 2;

std::size_t worst_index(const std::vector<Individual>& pop) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < pop.size(); ++i)
    if (pop[i].fitness > pop[worst].fitness) worst = i;
  return worst;  // ties keep the lowest index
}

}  // namespace

void GAConfig::check() const {
  if (n_pop < 4) throw std::invalid_argument("n_pop must be >= 4");
  if (n_can < 1 || n_can > n_pop) throw std::invalid_argument("n_can must be in [1, n_pop]");
  if (p_c < 0 || p_c > 1 || p_m < 0 || p_m > 1)
    throw std::invalid_argument("probabilities must be in [0, 1]");
  if (eps_conv <= 0) throw std::invalid_argument("eps_conv must be positive");
  if (patience < 1) throw std::invalid_argument("patience must be >= 1");
  if (max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
  if (turn_max < 0) throw std::invalid_argument("turn_max must be non-negative");
  if (seed_box.x1 < seed_box.x0 || seed_box.y1 < seed_box.y0)
    throw std::invalid_argument("seed box is inverted");
  if (top_fraction <= 0 || top_fraction > 1)
    throw std::invalid_argument("top_fraction must be in (0, 1]");
}

namespace detail {

std::vector<double> genome_to_genes(const Genome& g, const GAConfig& config) {
  std::vector<double> genes;
  genes.reserve(g.gene_count());
  genes.push_back(g.x_a);
  genes.push_back(g.y_a);
  genes.push_back(g.alpha1);
  genes.push_back(config.anchor_opposite ? wrap_angle_signed(g.alpha2 - g.alpha1 - kPi)
                                         : g.alpha2);
  genes.push_back(g.beta1);
  genes.push_back(config.anchor_opposite ? wrap_angle_signed(g.beta2 - g.beta1 - kPi)
                                         : g.beta2);
  for (const auto* turns : {&g.gamma1, &g.gamma2, &g.eps1, &g.eps2})
    genes.insert(genes.end(), turns->begin(), turns->end());
  return genes;
}

Genome genes_to_genome(const std::vector<double>& genes,
                       const std::array<std::size_t, 4>& turn_counts, const GAConfig& config) {
  Genome g;
  g.x_a = genes[0];
  g.y_a = genes[1];
  g.alpha1 = wrap_angle(genes[2]);
  g.alpha2 = config.anchor_opposite ? wrap_angle(g.alpha1 + kPi + genes[3]) : wrap_angle(genes[3]);
  g.beta1 = wrap_angle(genes[4]);
  g.beta2 = config.anchor_opposite ? wrap_angle(g.beta1 + kPi + genes[5]) : wrap_angle(genes[5]);
  std::size_t at = 6;
  std::vector<double>* lists[4] = {&g.gamma1, &g.gamma2, &g.eps1, &g.eps2};
  for (std::size_t b = 0; b < 4; ++b) {
    lists[b]->assign(genes.begin() + static_cast<std::ptrdiff_t>(at),
                     genes.begin() + static_cast<std::ptrdiff_t>(at + turn_counts[b]));
    at += turn_counts[b];
  }
  return g;
}

std::pair<double, double> gene_interval(std::size_t index, const GAConfig& config) {
  switch (index) {
    case 0: return {config.seed_box.x0, config.seed_box.x1};
    case 1: return {config.seed_box.y0, config.seed_box.y1};
    case 2:
    case 4: return {0.0, kTwoPi};
    case 3:
    case 5:
      if (config.anchor_opposite) return {-config.turn_max, config.turn_max};
      return {0.0, kTwoPi};
    default: return {-config.turn_max, config.turn_max};
  }
}

}  // namespace detail

Genome random_genome(const GAConfig& config, std::mt19937_64& rng) {
  const std::size_t total =
      6 + config.turn_counts[0] + config.turn_counts[1] + config.turn_counts[2] + config.turn_counts[3];
  std::vector<double> genes(total);
  for (std::size_t k = 0; k < total; ++k) {
    const auto [lo, hi] = detail::gene_interval(k, config);
    genes[k] = uniform_real(rng, lo, hi);
  }
  return detail::genes_to_genome(genes, config.turn_counts, config);
}

double fitness_eval(const SurfaceSpec& spec, const Genome& genome, double w,
                    const GAConfig& config) {
  try {
    const TchebychevNet net = map_surface(spec, genome, w);
    const ValidityReport validity = validate_net(net, spec, w, config.validity);
    if (!validity.complete || !validity.overlap_free) return kInvalid;
    const NetStats stats = net_stats(net, config.top_fraction);
    switch (config.fitness_kind) {
      case FitnessKind::max: return stats.c_max;
      case FitnessKind::mean: return stats.c_mean;
      case FitnessKind::top_fraction: return stats.c_top_mean;
    }
    return kInvalid;
  } catch (const SurfaceError&) {
    return kInvalid;
  }
}

const Individual& tournament_select(const std::vector<Individual>& pop, int n_can,
                                    std::mt19937_64& rng) {
  if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
  if (n_can < 1 || static_cast<std::size_t>(n_can) > pop.size())
    throw std::invalid_argument("tournament_select: n_can out of range");

  std::vector<std::size_t> drawn;
  drawn.reserve(static_cast<std::size_t>(n_can));
  while (drawn.size() < static_cast<std::size_t>(n_can)) {
    const std::size_t idx = uniform_index(rng, pop.size());
    if (std::find(drawn.begin(), drawn.end(), idx) == drawn.end()) drawn.push_back(idx);
  }
  std::size_t best = drawn[0];
  for (const std::size_t idx : drawn)
    if (pop[idx].fitness < pop[best].fitness || (pop[idx].fitness == pop[best].fitness && idx < best))
      best = idx;
  return pop[best];
}

std::pair<Genome, Genome> uniform_crossover(const Genome& p1, const Genome& p2, double p_c,
                                            const GAConfig& config, std::mt19937_64& rng) {
  if (!p1.same_layout(p2)) throw std::invalid_argument("uniform_crossover: gene layout mismatch");
  std::vector<double> g1 = detail::genome_to_genes(p1, config);
  std::vector<double> g2 = detail::genome_to_genes(p2, config);
  for (std::size_t k = 0; k < g1.size(); ++k) {
    if (uniform_unit(rng) > p_c) std::swap(g1[k], g2[k]);
  }
  const std::array<std::size_t, 4> counts{p1.gamma1.size(), p1.gamma2.size(), p1.eps1.size(),
                                          p1.eps2.size()};
  return {detail::genes_to_genome(g1, counts, config), detail::genes_to_genome(g2, counts, config)};
}

Genome mutate(const Genome& genome, double p_m, const GAConfig& config, std::mt19937_64& rng) {
  std::vector<double> genes = detail::genome_to_genes(genome, config);
  for (std::size_t k = 0; k < genes.size(); ++k) {
    if (uniform_unit(rng) < p_m) {
      const auto [lo, hi] = detail::gene_interval(k, config);
      genes[k] = uniform_real(rng, lo, hi);
    }
  }
  const std::array<std::size_t, 4> counts{genome.gamma1.size(), genome.gamma2.size(),
                                          genome.eps1.size(), genome.eps2.size()};
  return detail::genes_to_genome(genes, counts, config);
}

RunReport evolve_run(const SurfaceSpec& spec, double w, const GAConfig& config) {
  config.check();
  const std::size_t n = static_cast<std::size_t>(config.n_pop);

  // Initial population: one RNG stream per slot, invalid genomes resampled.
  std::vector<Individual> pop(n);
  std::atomic<bool> init_failed{false};
  parallel_for(n, config.threads, [&](std::size_t slot) {
    std::mt19937_64 rng = make_stream(config.seed, kInitDomain, slot);
    for (int attempt = 0; attempt < config.init_retry_cap; ++attempt) {
      Genome g = random_genome(config, rng);
      const double f = fitness_eval(spec, g, w, config);
      if (std::isfinite(f)) {
        pop[slot] = {std::move(g), f};
        return;
      }
    }
    init_failed.store(true);
  });
  if (init_failed.load())
    throw InitializationError("no valid genome found within the retry cap; surface or bounds too hostile");

  RunReport report;
  auto record = [&]() {
    double best = pop[0].fitness, sum = 0.0;
    for (const Individual& ind : pop) {
      best = std::min(best, ind.fitness);
      sum += ind.fitness;
    }
    report.history.push_back({best, sum / static_cast<double>(pop.size())});
  };
  record();

  int consecutive_flat = 0;
  for (int gen = 2; gen <= config.max_generations; ++gen) {
    // Breed from a snapshot so child evaluations are independent and can run
    // in parallel without changing the outcome.
    const std::vector<Individual> snapshot = pop;
    const std::size_t pairings = (n + 1) / 2;
    std::vector<Genome> children;
    children.reserve(n);
    for (std::size_t k = 0; k < pairings; ++k) {
      std::mt19937_64 rng = make_stream(config.seed, kBreedDomain, static_cast<std::uint64_t>(gen), k);
      const Individual& parent1 = tournament_select(snapshot, config.n_can, rng);
      const Individual& parent2 = tournament_select(snapshot, config.n_can, rng);
      auto [child1, child2] = uniform_crossover(parent1.genome, parent2.genome, config.p_c, config, rng);
      children.push_back(mutate(child1, config.p_m, config, rng));
      if (children.size() < n) children.push_back(mutate(child2, config.p_m, config, rng));
    }

    std::vector<double> child_fitness(children.size());
    parallel_for(children.size(), config.threads, [&](std::size_t c) {
      child_fitness[c] = fitness_eval(spec, children[c], w, config);
    });

    // Steady-state replacement: insert each pairing's children, then drop the
    // worst two. Invalid children die here under replacement pressure.
    for (std::size_t c = 0; c < children.size(); c += 2) {
      const std::size_t in_this_round = std::min<std::size_t>(2, children.size() - c);
      for (std::size_t d = 0; d < in_this_round; ++d)
        pop.push_back({std::move(children[c + d]), child_fitness[c + d]});
      for (std::size_t d = 0; d < in_this_round; ++d)
        pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(worst_index(pop)));
    }

    record();

    const double f_cur = report.history.back().best;
    const double f_prev = report.history[report.history.size() - 2].best;
    bool flat = false;
    if (f_cur == 0.0 && f_prev == 0.0)
      flat = true;  // zero-best plateau counts as converged
    else if (f_cur != 0.0)
      flat = std::fabs(f_cur - f_prev) / std::fabs(f_cur) < config.eps_conv;
    consecutive_flat = flat ? consecutive_flat + 1 : 0;
    if (consecutive_flat >= config.patience) {
      report.converged = true;
      break;
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i)
    if (pop[i].fitness < pop[best].fitness) best = i;
  report.best = pop[best];
  report.generations_run = static_cast<int>(report.history.size());
  return report;
}

}  // namespace chebnet
