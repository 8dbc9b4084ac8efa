#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"
#include "hyperim/rng.hpp"
#include "hyperim/swarm.hpp"

namespace hyperim {

struct SeedSelection {
  std::string method;
  std::vector<NodeId> seeds;  // k distinct compact ids
  std::uint32_t exact_spread = 0;
  std::uint32_t approx_fitness = 0;
};

// Fills exact_spread / approx_fitness for a chosen seed set.
void evaluate_selection(const Hypergraph& h, SeedSelection& selection, double p);

// Top-k nodes by hyperdegree, ties by ascending id.
SeedSelection select_hhd(const Hypergraph& h, std::uint32_t k);

// Uniform k-subset of the nodes.
SeedSelection select_random(const Hypergraph& h, std::uint32_t k, Rng& rng);

// Top-k nodes by degree (distinct-neighbor count), ties by ascending id.
SeedSelection select_np(const Hypergraph& h, std::uint32_t k);

// Power iteration on the clique expansion with uniform teleport; top-k by
// score, ties by ascending id.
SeedSelection select_pagerank(const Hypergraph& h, std::uint32_t k, double damping = 0.85,
                              std::uint32_t max_iterations = 100,
                              Execution exec = Execution::parallel);
std::vector<double> pagerank_scores(const Hypergraph& h, double damping = 0.85,
                                    std::uint32_t max_iterations = 100,
                                    Execution exec = Execution::parallel);

// Collective influence at radius `order` on the clique expansion:
// CI(v) = (deg(v) - 1) * sum of (deg(u) - 1) over nodes u at distance
// exactly `order` from v.
SeedSelection select_hci(const Hypergraph& h, std::uint32_t k, int order,
                         Execution exec = Execution::parallel);
std::uint64_t hci_score(const Hypergraph& h, NodeId v, int order);

struct GaConfig {
  std::uint32_t k = 10;
  double p = 0.5;
  std::uint32_t max_generations = 50;
  std::uint32_t population = 256;
  double crossover_prob = 0.8;
  double mutation_prob = 0.1;  // per gene
  std::uint64_t rng_master_seed = 0;

  void validate(std::uint32_t node_count) const;
};

// Generational GA over k-subsets with the same fitness as the swarm:
// tournament selection of size 2, union crossover (child sampled from the
// parents' union), per-gene reset mutation, elitism of one.
OptimizationResult run_ga(const Hypergraph& h, const GaConfig& cfg,
                          Execution exec = Execution::parallel);

}  // namespace hyperim
