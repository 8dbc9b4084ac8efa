#include "hyperim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hyperim/cascade.hpp"

namespace hyperim {

namespace {

enum GaStreamTag : std::uint64_t {
  kGaInitStream = 11,
  kGaChildStream = 12,
};

void check_k(std::uint32_t k, std::uint32_t n) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("seed set size k must lie in [1, n]; got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
  }
}

template <class Score>
std::vector<NodeId> top_k(std::uint32_t n, std::uint32_t k, const Score& score) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](NodeId a, NodeId b) {
    if (score(a) != score(b)) return score(a) > score(b);
    return a < b;
  });
  order.resize(k);
  return order;
}

std::vector<NodeId> distinct_sample(std::uint32_t n, std::uint32_t k, Rng& rng) {
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + rng.below_u32(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

void evaluate_selection(const Hypergraph& h, SeedSelection& selection, double p) {
  CascadeEngine engine(h);
  selection.approx_fitness = engine.spread_size(selection.seeds, p, 2);
  selection.exact_spread = engine.spread_size(selection.seeds, p);
}

SeedSelection select_hhd(const Hypergraph& h, std::uint32_t k) {
  check_k(k, h.node_count());
  return {"hhd", top_k(h.node_count(), k, [&](NodeId v) { return h.hyperdegree(v); })};
}

SeedSelection select_random(const Hypergraph& h, std::uint32_t k, Rng& rng) {
  check_k(k, h.node_count());
  return {"random", distinct_sample(h.node_count(), k, rng)};
}

SeedSelection select_np(const Hypergraph& h, std::uint32_t k) {
  check_k(k, h.node_count());
  return {"np", top_k(h.node_count(), k, [&](NodeId v) { return h.degree(v); })};
}

std::vector<double> pagerank_scores(const Hypergraph& h, double damping,
                                    std::uint32_t max_iterations, Execution exec) {
  if (!(damping > 0.0) || damping >= 1.0) {
    throw std::invalid_argument("pagerank damping must lie in (0, 1)");
  }
  const NodeId n = h.node_count();
  const double teleport = (1.0 - damping) / n;
  std::vector<double> scores(n, 1.0 / n);
  std::vector<double> next(n, 0.0);

  for (std::uint32_t iter = 0; iter < max_iterations; ++iter) {
    for_each_index(n, exec, [&](std::size_t vi) {
      const NodeId v = static_cast<NodeId>(vi);
      double sum = 0.0;
      for (NodeId u : h.neighbors(v)) sum += scores[u] / h.degree(u);
      next[vi] = teleport + damping * sum;
    });
    double delta = 0.0;
    for (NodeId v = 0; v < n; ++v) delta += std::abs(next[v] - scores[v]);
    scores.swap(next);
    if (delta < 1e-10) break;
  }
  return scores;
}

SeedSelection select_pagerank(const Hypergraph& h, std::uint32_t k, double damping,
                              std::uint32_t max_iterations, Execution exec) {
  check_k(k, h.node_count());
  const auto scores = pagerank_scores(h, damping, max_iterations, exec);
  return {"pagerank", top_k(h.node_count(), k, [&](NodeId v) { return scores[v]; })};
}

std::uint64_t hci_score(const Hypergraph& h, NodeId v, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("hci order must be 1 or 2");
  const std::uint32_t deg_v = h.degree(v);
  if (deg_v == 0) return 0;

  std::uint64_t boundary_sum = 0;
  if (order == 1) {
    for (NodeId u : h.neighbors(v)) boundary_sum += h.degree(u) - 1;
  } else {
    // nodes at expansion distance exactly 2
    std::vector<NodeId> ring;
    for (NodeId u : h.neighbors(v)) {
      for (NodeId w : h.neighbors(u)) ring.push_back(w);
    }
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    auto first_ring = h.neighbors(v);
    for (NodeId w : ring) {
      if (w == v) continue;
      if (std::binary_search(first_ring.begin(), first_ring.end(), w)) continue;
      boundary_sum += h.degree(w) - 1;
    }
  }
  return static_cast<std::uint64_t>(deg_v - 1) * boundary_sum;
}

SeedSelection select_hci(const Hypergraph& h, std::uint32_t k, int order, Execution exec) {
  check_k(k, h.node_count());
  const NodeId n = h.node_count();
  std::vector<std::uint64_t> scores(n);
  for_each_index(n, exec, [&](std::size_t vi) {
    scores[vi] = hci_score(h, static_cast<NodeId>(vi), order);
  });
  const std::string method = order == 1 ? "hci1" : "hci2";
  return {method, top_k(n, k, [&](NodeId v) { return scores[v]; })};
}

void GaConfig::validate(std::uint32_t node_count) const {
  if (k == 0 || k > node_count) {
    throw std::invalid_argument("ga: k must lie in [1, n]");
  }
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("ga: p must lie in (0, 1]");
  if (population == 0) throw std::invalid_argument("ga: population must be positive");
}

OptimizationResult run_ga(const Hypergraph& h, const GaConfig& cfg, Execution exec) {
  const std::uint32_t n = h.node_count();
  cfg.validate(n);
  const std::uint32_t pop = cfg.population;
  const std::uint64_t master = cfg.rng_master_seed;

  const int workers = max_worker_count();
  std::vector<CascadeEngine> engines;
  engines.reserve(workers);
  for (int w = 0; w < workers; ++w) engines.emplace_back(h);

  std::vector<std::vector<NodeId>> population(pop);
  std::vector<std::uint32_t> fitness(pop, 0);
  for_each_index(pop, exec, [&](std::size_t i) {
    Rng rng = Rng::derive(master, {kGaInitStream, i});
    population[i] = distinct_sample(n, cfg.k, rng);
    fitness[i] = engines[worker_index()].spread_size(population[i], cfg.p, 2);
  });

  const auto best_index = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop; ++i) {
      if (fitness[i] > fitness[best]) best = i;
    }
    return best;
  };

  std::size_t elite = best_index();
  std::vector<NodeId> best_ever = population[elite];
  std::uint32_t best_ever_fitness = fitness[elite];

  OptimizationResult result;
  result.fitness_history.reserve(cfg.max_generations + 1);
  result.fitness_history.push_back(best_ever_fitness);

  std::vector<std::vector<NodeId>> children(pop);

  for (std::uint32_t gen = 1; gen <= cfg.max_generations; ++gen) {
    children[0] = population[elite];  // elitism of one

    for_each_index(pop, exec, [&](std::size_t i) {
      if (i == 0) return;
      Rng rng = Rng::derive(master, {kGaChildStream, gen, i});

      const auto tournament = [&]() -> std::size_t {
        const std::size_t a = rng.below(pop);
        const std::size_t b = rng.below(pop);
        return fitness[b] > fitness[a] ? b : a;
      };
      const std::size_t parent_a = tournament();
      const std::size_t parent_b = tournament();

      std::vector<NodeId> child;
      if (rng.uniform() < cfg.crossover_prob) {
        // child = k distinct genes sampled from the parents' union
        std::vector<NodeId> pool(population[parent_a]);
        pool.insert(pool.end(), population[parent_b].begin(), population[parent_b].end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (std::uint32_t g = 0; g < cfg.k; ++g) {
          const std::uint32_t j =
              g + rng.below_u32(static_cast<std::uint32_t>(pool.size()) - g);
          std::swap(pool[g], pool[j]);
        }
        pool.resize(cfg.k);
        child = std::move(pool);
      } else {
        child = population[parent_a];
      }

      // per-gene reset mutation to a uniform non-member
      for (std::uint32_t g = 0; g < cfg.k; ++g) {
        if (rng.uniform() >= cfg.mutation_prob) continue;
        if (cfg.k == n) break;  // no non-member exists
        for (;;) {
          const NodeId v = rng.below_u32(n);
          if (std::find(child.begin(), child.end(), v) == child.end()) {
            child[g] = v;
            break;
          }
        }
      }
      children[i] = std::move(child);
    });

    population.swap(children);
    for_each_index(pop, exec, [&](std::size_t i) {
      fitness[i] = engines[worker_index()].spread_size(population[i], cfg.p, 2);
    });

    elite = best_index();
    if (fitness[elite] > best_ever_fitness) {
      best_ever_fitness = fitness[elite];
      best_ever = population[elite];
    }
    result.fitness_history.push_back(best_ever_fitness);
  }

  result.approx_fitness = best_ever_fitness;
  result.exact_spread = engines[0].spread_size(best_ever, cfg.p);
  result.seeds.reserve(best_ever.size());
  for (NodeId v : best_ever) result.seeds.push_back(h.original_id(v));
  std::sort(result.seeds.begin(), result.seeds.end());
  return result;
}

}  // namespace hyperim
