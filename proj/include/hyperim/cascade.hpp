#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"

namespace hyperim {

// Outcome of a threshold cascade. `rounds` holds the newly activated nodes
// per round with round 0 = seeds; rounds that activate hyperedges without new
// nodes are not recorded.
struct CascadeResult {
  std::vector<NodeId> activated_nodes;  // sorted
  std::vector<EdgeId> activated_edges;  // sorted
  std::vector<std::vector<NodeId>> rounds;
};

// Reusable scratch for cascade evaluations. One engine per worker; all state
// is stamped so repeated calls do not reallocate.
class CascadeEngine {
 public:
  explicit CascadeEngine(const Hypergraph& h);

  static constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

  // Size of the active node set after at most `max_waves` synchronous
  // activation waves (kUnbounded = run to the fixpoint).
  std::uint32_t spread_size(std::span<const NodeId> seeds, double p,
                            std::uint32_t max_waves = kUnbounded);

  // Full cascade with activated sets and (optionally) the round trace.
  CascadeResult run(std::span<const NodeId> seeds, double p,
                    std::uint32_t max_waves = kUnbounded, bool keep_trace = true);

  const Hypergraph& hypergraph() const { return *h_; }

 private:
  std::uint32_t propagate(std::span<const NodeId> seeds, double p, std::uint32_t max_waves,
                          CascadeResult* out, bool keep_trace);
  void bump_stamp();

  const Hypergraph* h_;
  std::uint32_t stamp_ = 0;
  std::uint64_t wave_counter_ = 0;
  std::vector<std::uint32_t> node_stamp_;
  std::vector<std::uint32_t> edge_fired_stamp_;
  std::vector<std::uint32_t> edge_count_stamp_;
  std::vector<std::uint32_t> edge_count_;
  std::vector<std::uint64_t> edge_wave_stamp_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_frontier_;
  std::vector<EdgeId> candidates_;
  std::vector<NodeId> active_list_;
  std::vector<EdgeId> fired_list_;
};

// Exact propagation: least fixpoint of the activation operator
// T(A) = A ∪ ⋃{δ_e : |A ∩ δ_e| / |δ_e| >= p}. Deterministic; terminates in
// at most m waves.
CascadeResult simulate_threshold(const Hypergraph& h, std::span<const NodeId> seeds, double p,
                                 bool keep_trace = true);

// Two-wave truncation of the exact cascade: hyperedges fire against the seed
// set, then against the active set after the first wave. Always a subset of
// the exact spread, with equality when the cascade adds no node after its
// second round.
std::vector<NodeId> two_layer_spread(const Hypergraph& h, std::span<const NodeId> seeds, double p);

// |two_layer_spread|. The quantity optimizers maximize.
std::uint32_t two_layer_fitness(const Hypergraph& h, std::span<const NodeId> seeds, double p);

// Two-layer fitness of every position in a population. Serial and parallel
// execution produce identical results.
std::vector<std::uint32_t> evaluate_population(const Hypergraph& h,
                                               const std::vector<std::vector<NodeId>>& positions,
                                               double p, Execution exec = Execution::parallel);

}  // namespace hyperim
