#include "hyperim/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperim {

namespace {

// Stream tags so every randomized phase has its own derivation path.
enum StreamTag : std::uint64_t {
  kInitStream = 1,
  kGenerationStream = 2,
  kLocalTargetStream = 3,
};

std::vector<NodeId> top_k_by_score(const std::vector<double>& scores, std::uint32_t k) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  order.resize(k);
  return order;
}

// `count` distinct indices from [0, total), uniformly without replacement.
std::vector<std::uint32_t> sample_indices(std::uint32_t total, std::uint32_t count, Rng& rng) {
  std::vector<std::uint32_t> pool(total);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t j = i + rng.below_u32(total - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

void OptimizerConfig::validate(std::uint32_t node_count) const {
  if (k == 0) throw std::invalid_argument("optimizer: k must be positive");
  if (k > node_count) {
    throw std::invalid_argument("optimizer: k (" + std::to_string(k) + ") exceeds node count (" +
                                std::to_string(node_count) + ")");
  }
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("optimizer: p must lie in (0, 1]");
  if (population == 0) throw std::invalid_argument("optimizer: population must be positive");
  if (tau < 1.0 || tau > 2.0) throw std::invalid_argument("optimizer: tau must lie in [1, 2]");
  if (local_fraction < 0.0 || local_fraction > 1.0 || local_element_prob < 0.0 ||
      local_element_prob > 1.0) {
    throw std::invalid_argument("optimizer: local search probabilities must lie in [0, 1]");
  }
}

std::vector<std::vector<NodeId>> init_degree_biased(std::span<const std::uint32_t> degrees,
                                                    std::uint32_t k, std::uint32_t population,
                                                    std::uint64_t master_seed) {
  const std::uint32_t n = static_cast<std::uint32_t>(degrees.size());
  if (k > n) throw std::invalid_argument("init: k exceeds node count");

  std::vector<std::vector<NodeId>> positions(population);
  std::vector<double> scores(n);
  for (std::uint32_t i = 0; i < population; ++i) {
    Rng rng = Rng::derive(master_seed, {kInitStream, i});
    for (std::uint32_t v = 0; v < n; ++v) {
      scores[v] = static_cast<double>(degrees[v]) * rng.uniform(0.5, 1.0);
    }
    positions[i] = top_k_by_score(scores, k);
  }
  return positions;
}

std::vector<std::vector<NodeId>> init_random(std::uint32_t node_count, std::uint32_t k,
                                             std::uint32_t population, std::uint64_t master_seed) {
  if (k > node_count) throw std::invalid_argument("init: k exceeds node count");
  std::vector<std::vector<NodeId>> positions(population);
  for (std::uint32_t i = 0; i < population; ++i) {
    Rng rng = Rng::derive(master_seed, {kInitStream, i});
    positions[i] = sample_indices(node_count, k, rng);
  }
  return positions;
}

std::vector<std::uint8_t> guidance_mask(std::span<const NodeId> position,
                                        std::span<const NodeId> best) {
  std::vector<std::uint8_t> mask(position.size(), 1);
  for (std::size_t j = 0; j < position.size(); ++j) {
    if (std::find(best.begin(), best.end(), position[j]) != best.end()) mask[j] = 0;
  }
  return mask;
}

std::vector<std::uint8_t> velocity_from_guidance(std::span<const std::uint8_t> velocity,
                                                 std::span<const std::uint8_t> pbest_mask,
                                                 std::span<const std::uint8_t> gbest_mask,
                                                 double omega, double c1r1, double c2r2,
                                                 double tau) {
  std::vector<std::uint8_t> updated(velocity.size());
  for (std::size_t j = 0; j < velocity.size(); ++j) {
    const double u = omega * velocity[j] + c1r1 * pbest_mask[j] + c2r2 * gbest_mask[j];
    updated[j] = u >= tau ? 1 : 0;
  }
  return updated;
}

void update_velocity(Particle& particle, std::span<const NodeId> gbest, const OptimizerConfig& cfg,
                     Rng& rng) {
  const double r1 = rng.uniform();
  const double r2 = rng.uniform();
  const auto pbest_mask = guidance_mask(particle.position, particle.pbest);
  const auto gbest_mask = guidance_mask(particle.position, gbest);
  particle.velocity = velocity_from_guidance(particle.velocity, pbest_mask, gbest_mask, cfg.omega,
                                             cfg.c1 * r1, cfg.c2 * r2, cfg.tau);
}

void update_position(std::vector<NodeId>& position, std::span<const std::uint8_t> velocity,
                     std::uint32_t node_count, Rng& rng) {
  const std::uint32_t k = static_cast<std::uint32_t>(position.size());
  for (std::uint32_t j = 0; j < k; ++j) {
    if (!velocity[j]) continue;
    // Pool: all nodes minus the other k-1 occupants. The replaced node itself
    // stays drawable, so the pool has n-k+1 entries and is never empty.
    const auto occupied_elsewhere = [&](NodeId v) {
      for (std::uint32_t i = 0; i < k; ++i) {
        if (i != j && position[i] == v) return true;
      }
      return false;
    };
    bool replaced = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const NodeId v = rng.below_u32(node_count);
      if (!occupied_elsewhere(v)) {
        position[j] = v;
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      // k close to n: draw an exact pool index instead of rejecting further
      std::uint64_t pool = node_count - k + 1;
      std::uint64_t pick = rng.below(pool);
      for (NodeId v = 0; v < node_count; ++v) {
        if (occupied_elsewhere(v)) continue;
        if (pick-- == 0) {
          position[j] = v;
          break;
        }
      }
    }
  }
}

std::uint32_t local_search(std::vector<NodeId>& position, const Hypergraph& h,
                           const OptimizerConfig& cfg, CascadeEngine& engine, Rng& rng) {
  std::uint32_t best_fitness = engine.spread_size(position, cfg.p, 2);
  std::vector<NodeId> candidate(position);
  const std::size_t k = position.size();
  for (std::size_t slot = 0; slot < k; ++slot) {
    if (rng.uniform() >= cfg.local_element_prob) continue;
    // The scanned neighborhood belongs to the slot's occupant at scan start,
    // even after an accepted swap.
    const NodeId original = position[slot];
    for (NodeId neighbor : h.neighbors(original)) {
      if (std::find(position.begin(), position.end(), neighbor) != position.end()) continue;
      candidate = position;
      candidate[slot] = neighbor;
      const std::uint32_t fitness = engine.spread_size(candidate, cfg.p, 2);
      if (fitness > best_fitness) {
        position = candidate;
        best_fitness = fitness;
      }
    }
  }
  return best_fitness;
}

OptimizationResult run_optimizer(const Hypergraph& h, const OptimizerConfig& cfg, Execution exec) {
  const std::uint32_t n = h.node_count();
  cfg.validate(n);
  const std::uint32_t pop = cfg.population;
  const std::uint64_t master = cfg.rng_master_seed;

  std::vector<std::uint32_t> degrees(n);
  for (NodeId v = 0; v < n; ++v) degrees[v] = h.degree(v);

  auto positions = cfg.variant == Variant::pso
                       ? init_random(n, cfg.k, pop, master)
                       : init_degree_biased(degrees, cfg.k, cfg.population, master);

  const int workers = max_worker_count();
  std::vector<CascadeEngine> engines;
  engines.reserve(workers);
  for (int w = 0; w < workers; ++w) engines.emplace_back(h);

  std::vector<Particle> particles(pop);
  for_each_index(pop, exec, [&](std::size_t i) {
    Particle& prt = particles[i];
    prt.position = std::move(positions[i]);
    prt.velocity.assign(cfg.k, 0);
    prt.pbest = prt.position;
    prt.pbest_fitness = engines[worker_index()].spread_size(prt.position, cfg.p, 2);
  });

  // gbest: running best over all pbests; ties keep the earlier holder.
  std::vector<NodeId> gbest;
  std::uint32_t gbest_fitness = 0;
  for (const Particle& prt : particles) {
    if (gbest.empty() || prt.pbest_fitness > gbest_fitness) {
      gbest = prt.pbest;
      gbest_fitness = prt.pbest_fitness;
    }
  }

  OptimizationResult result;
  result.fitness_history.reserve(cfg.max_generations + 1);
  result.fitness_history.push_back(gbest_fitness);

  const bool with_local_search = cfg.variant == Variant::hdpso;
  const std::uint32_t local_targets =
      with_local_search
          ? static_cast<std::uint32_t>(std::ceil(cfg.local_fraction * static_cast<double>(pop)))
          : 0;

  std::vector<std::uint8_t> selected(pop, 0);
  std::vector<std::uint32_t> fitness(pop, 0);

  for (std::uint32_t gen = 1; gen <= cfg.max_generations; ++gen) {
    std::fill(selected.begin(), selected.end(), 0);
    if (local_targets > 0) {
      Rng rng = Rng::derive(master, {kLocalTargetStream, gen});
      for (std::uint32_t i : sample_indices(pop, std::min(local_targets, pop), rng)) {
        selected[i] = 1;
      }
    }

    for_each_index(pop, exec, [&](std::size_t i) {
      Particle& prt = particles[i];
      CascadeEngine& engine = engines[worker_index()];
      Rng rng = Rng::derive(master, {kGenerationStream, gen, i});

      update_velocity(prt, gbest, cfg, rng);
      update_position(prt.position, prt.velocity, n, rng);
      fitness[i] = selected[i] ? local_search(prt.position, h, cfg, engine, rng)
                               : engine.spread_size(prt.position, cfg.p, 2);
      if (fitness[i] > prt.pbest_fitness) {
        prt.pbest = prt.position;
        prt.pbest_fitness = fitness[i];
      }
    });

    for (const Particle& prt : particles) {
      if (prt.pbest_fitness > gbest_fitness) {
        gbest = prt.pbest;
        gbest_fitness = prt.pbest_fitness;
      }
    }
    result.fitness_history.push_back(gbest_fitness);
  }

  result.approx_fitness = gbest_fitness;
  result.exact_spread = engines[0].spread_size(gbest, cfg.p);
  result.seeds.reserve(gbest.size());
  for (NodeId v : gbest) result.seeds.push_back(h.original_id(v));
  std::sort(result.seeds.begin(), result.seeds.end());
  return result;
}

std::string OptimizationResult::to_json() const {
  std::ostringstream out;
  out << "{\"seeds\":[";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out << ',';
    out << seeds[i];
  }
  out << "],\"approx_fitness\":" << approx_fitness << ",\"exact_spread\":" << exact_spread
      << ",\"history\":[";
  for (std::size_t i = 0; i < fitness_history.size(); ++i) {
    if (i) out << ',';
    out << fitness_history[i];
  }
  out << "]}";
  return out.str();
}

}  // namespace hyperim
