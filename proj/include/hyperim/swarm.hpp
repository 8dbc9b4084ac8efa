#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperim/cascade.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"
#include "hyperim/rng.hpp"

namespace hyperim {

// hdpso = degree-biased init + local search; pso_init keeps only the init;
// pso is the plain discrete update rule with random initialization.
enum class Variant { hdpso, pso, pso_init };

struct OptimizerConfig {
  std::uint32_t k = 10;
  double p = 0.5;
  std::uint32_t max_generations = 50;
  std::uint32_t population = 256;
  double c1 = 1.2;
  double c2 = 1.2;
  double omega = 0.7;
  double tau = 1.5;                 // replacement threshold, in [1, 2]
  double local_fraction = 0.1;      // share of particles refined per generation
  double local_element_prob = 0.2;  // per-slot chance of a neighborhood scan
  Variant variant = Variant::hdpso;
  std::uint64_t rng_master_seed = 0;

  void validate(std::uint32_t node_count) const;
};

// Candidate seed set plus the binary replace/retain indicator driving it.
struct Particle {
  std::vector<NodeId> position;       // k distinct node ids
  std::vector<std::uint8_t> velocity; // k bits
  std::vector<NodeId> pbest;
  std::uint32_t pbest_fitness = 0;
};

struct OptimizationResult {
  std::vector<std::uint64_t> seeds;  // best seed set, original ids, sorted
  std::uint32_t approx_fitness = 0;
  std::uint32_t exact_spread = 0;
  std::vector<std::uint32_t> fitness_history;  // best-so-far per generation, [0] = init

  std::string to_json() const;
};

// One initial position per particle: every node scored deg(v) * U(0.5, 1.0)
// with fresh draws per particle, ranked descending (ties by ascending id),
// top k taken. Streams derive from (master_seed, particle).
std::vector<std::vector<NodeId>> init_degree_biased(std::span<const std::uint32_t> degrees,
                                                    std::uint32_t k, std::uint32_t population,
                                                    std::uint64_t master_seed);

// Uniform distinct-k positions for the plain PSO variant.
std::vector<std::vector<NodeId>> init_random(std::uint32_t node_count, std::uint32_t k,
                                             std::uint32_t population, std::uint64_t master_seed);

// Bit j = 0 when position[j] occurs anywhere in `best` (keep the shared
// node), 1 otherwise (replacement candidate).
std::vector<std::uint8_t> guidance_mask(std::span<const NodeId> position,
                                        std::span<const NodeId> best);

// New velocity: bit j = 1 iff
//   omega * v_j + c1r1 * pbest_mask_j + c2r2 * gbest_mask_j >= tau.
std::vector<std::uint8_t> velocity_from_guidance(std::span<const std::uint8_t> velocity,
                                                 std::span<const std::uint8_t> pbest_mask,
                                                 std::span<const std::uint8_t> gbest_mask,
                                                 double omega, double c1r1, double c2r2,
                                                 double tau);

// Draws r1, r2 once and applies velocity_from_guidance against pbest/gbest.
void update_velocity(Particle& particle, std::span<const NodeId> gbest,
                     const OptimizerConfig& cfg, Rng& rng);

// Replaces every slot with velocity bit 1 by a node drawn uniformly from the
// nodes not currently occupying the other slots; processed left to right so
// the position stays distinct throughout.
void update_position(std::vector<NodeId>& position, std::span<const std::uint8_t> velocity,
                     std::uint32_t node_count, Rng& rng);

// Greedy neighborhood refinement: for each slot (selected with probability
// local_element_prob) scan the neighbors of the slot's original occupant in
// ascending id order and keep any substitution that strictly improves the
// two-layer fitness. Returns the fitness of the refined position.
std::uint32_t local_search(std::vector<NodeId>& position, const Hypergraph& h,
                           const OptimizerConfig& cfg, CascadeEngine& engine, Rng& rng);

// Full optimizer loop. Reported spread is the exact cascade size of the best
// position; evolution itself uses the two-layer fitness. Results are
// bit-identical across serial and parallel execution.
OptimizationResult run_optimizer(const Hypergraph& h, const OptimizerConfig& cfg,
                                 Execution exec = Execution::parallel);

}  // namespace hyperim
