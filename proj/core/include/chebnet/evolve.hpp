#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chebnet/genome.hpp"
#include "chebnet/geometry.hpp"
#include "chebnet/net.hpp"
#include "chebnet/surface.hpp"

namespace chebnet {

struct InitializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FitnessKind { max, mean, top_fraction };

/// Genetic-algorithm parameters. Defaults follow the reference runs:
/// crossover 0.5, mutation 0.01, population 100.
struct GAConfig {
  int n_pop = 100;
  int n_can = 3;          // tournament size
  double p_c = 0.5;       // per-gene probability of keeping genes in place
  double p_m = 0.01;      // per-gene mutation probability
  double eps_conv = 1e-3; // Eq-2 style relative improvement threshold
  int patience = 5;       // consecutive converged steps required (1 = strict two-generation rule)
  int max_generations = 200;
  std::uint64_t seed = 1;
  FitnessKind fitness_kind = FitnessKind::max;
  double top_fraction = 0.1;  // used by FitnessKind::top_fraction
  /// Bound on every turn-angle gene. 5 degrees: wide enough for the GA to
  /// bend guidelines, tight enough that random draws stay competitive with
  /// straight nets (larger bounds push random-lot curvatures far above the
  /// reference lines).
  double turn_max = 5.0 * kPi / 180.0;
  Rect seed_box{-2, 2, -2, 2};
  std::array<std::size_t, 4> turn_counts{11, 11, 11, 11};  // gamma1, gamma2, eps1, eps2
  /// Keep alpha2/beta2 within turn_max of the antipode of alpha1/beta1 so a
  /// guideline runs roughly straight through A. Off = fully independent angles.
  bool anchor_opposite = true;
  int init_retry_cap = 1000;
  int threads = 0;  // worker cap for fitness evaluation; 0 = hardware
  ValidityParams validity{};

  void check() const;
};

struct Individual {
  Genome genome;
  double fitness = 0.0;  // +inf sentinel marks an invalid mapping
};

struct GenerationStats {
  double best = 0.0;
  double mean = 0.0;
};

struct RunReport {
  std::vector<GenerationStats> history;  // one entry per generation, the first is the initial population
  Individual best;
  int generations_run = 0;
  bool converged = false;
};

/// Draw a genome uniformly within the configured bounds: A in the seed box,
/// alpha1/beta1 anywhere, alpha2/beta2 within turn_max of the antipode
/// (unless anchoring is off), every turn in [-turn_max, turn_max].
Genome random_genome(const GAConfig& config, std::mt19937_64& rng);

/// Map the genome, check validity, and reduce curvature per fitness_kind.
/// Invalid or failed mappings return the +inf sentinel.
double fitness_eval(const SurfaceSpec& spec, const Genome& genome, double w,
                    const GAConfig& config);

/// Tournament selection: n_can distinct individuals drawn uniformly, lowest
/// fitness wins, ties broken by lowest population index.
const Individual& tournament_select(const std::vector<Individual>& pop, int n_can,
                                    std::mt19937_64& rng);

/// Per gene position: draw u in [0,1); u <= p_c keeps the genes in place,
/// u > p_c exchanges them between the children.
std::pair<Genome, Genome> uniform_crossover(const Genome& p1, const Genome& p2, double p_c,
                                            const GAConfig& config, std::mt19937_64& rng);

/// Per gene, with probability p_m redraw uniformly from that gene's interval.
Genome mutate(const Genome& genome, double p_m, const GAConfig& config, std::mt19937_64& rng);

/// Full optimization run: random initial population (invalid draws
/// resampled), then steady-state generations of tournament selection,
/// uniform crossover, mutation and worst-two replacement until the best
/// fitness stalls for `patience` consecutive generations or the generation
/// cap is hit.
RunReport evolve_run(const SurfaceSpec& spec, double w, const GAConfig& config);

namespace detail {
/// Flat gene vector view used by the operators. Index order: x_a, y_a,
/// alpha1, alpha2, beta1, beta2, gamma1..., gamma2..., eps1..., eps2...
/// With anchoring on, positions 3 and 5 hold offsets from the antipode of
/// alpha1/beta1 so that crossover and mutation keep the pair coupled.
std::vector<double> genome_to_genes(const Genome& g, const GAConfig& config);
Genome genes_to_genome(const std::vector<double>& genes,
                       const std::array<std::size_t, 4>& turn_counts, const GAConfig& config);
std::pair<double, double> gene_interval(std::size_t index, const GAConfig& config);
}  // namespace detail

}  // namespace chebnet
