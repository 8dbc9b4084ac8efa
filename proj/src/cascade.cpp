#include "hyperim/cascade.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperim {

namespace {

void check_threshold(double p) {
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("threshold p must lie in (0, 1]");
  }
}

bool meets_threshold(std::uint32_t active, std::uint32_t size, double p) {
  return static_cast<double>(active) / static_cast<double>(size) >= p;
}

}  // namespace

CascadeEngine::CascadeEngine(const Hypergraph& h)
    : h_(&h),
      node_stamp_(h.node_count(), 0),
      edge_fired_stamp_(h.edge_count(), 0),
      edge_count_stamp_(h.edge_count(), 0),
      edge_count_(h.edge_count(), 0),
      edge_wave_stamp_(h.edge_count(), 0) {}

void CascadeEngine::bump_stamp() {
  if (++stamp_ == 0) {
    // wrapped: clear everything once and restart
    std::fill(node_stamp_.begin(), node_stamp_.end(), 0);
    std::fill(edge_fired_stamp_.begin(), edge_fired_stamp_.end(), 0);
    std::fill(edge_count_stamp_.begin(), edge_count_stamp_.end(), 0);
    stamp_ = 1;
  }
}

std::uint32_t CascadeEngine::propagate(std::span<const NodeId> seeds, double p,
                                       std::uint32_t max_waves, CascadeResult* out,
                                       bool keep_trace) {
  check_threshold(p);
  const NodeId n = h_->node_count();
  bump_stamp();

  frontier_.clear();
  active_list_.clear();
  fired_list_.clear();
  std::uint32_t active_count = 0;

  for (NodeId s : seeds) {
    if (s >= n) throw std::out_of_range("seed node id out of range");
    if (node_stamp_[s] == stamp_) continue;  // duplicate seed
    node_stamp_[s] = stamp_;
    frontier_.push_back(s);
    ++active_count;
  }
  if (out) {
    active_list_.insert(active_list_.end(), frontier_.begin(), frontier_.end());
    if (keep_trace) {
      auto seed_round = frontier_;
      std::sort(seed_round.begin(), seed_round.end());
      out->rounds.push_back(std::move(seed_round));
    }
  }

  std::uint32_t wave = 0;
  while (!frontier_.empty() && wave < max_waves) {
    ++wave;
    ++wave_counter_;
    candidates_.clear();
    for (NodeId v : frontier_) {
      for (EdgeId e : h_->incident_edges(v)) {
        if (edge_fired_stamp_[e] == stamp_) continue;
        if (edge_count_stamp_[e] != stamp_) {
          edge_count_stamp_[e] = stamp_;
          edge_count_[e] = 0;
        }
        ++edge_count_[e];
        // an edge is a candidate in every wave where its count changed
        if (edge_wave_stamp_[e] != wave_counter_) {
          edge_wave_stamp_[e] = wave_counter_;
          candidates_.push_back(e);
        }
      }
    }

    next_frontier_.clear();
    for (EdgeId e : candidates_) {
      if (edge_fired_stamp_[e] == stamp_) continue;
      auto members = h_->edge_members(e);
      if (!meets_threshold(edge_count_[e], static_cast<std::uint32_t>(members.size()), p)) continue;
      edge_fired_stamp_[e] = stamp_;
      if (out) fired_list_.push_back(e);
      for (NodeId u : members) {
        if (node_stamp_[u] == stamp_) continue;
        node_stamp_[u] = stamp_;
        next_frontier_.push_back(u);
        ++active_count;
      }
    }
    if (out) {
      active_list_.insert(active_list_.end(), next_frontier_.begin(), next_frontier_.end());
      if (keep_trace && !next_frontier_.empty()) {
        auto round = next_frontier_;
        std::sort(round.begin(), round.end());
        out->rounds.push_back(std::move(round));
      }
    }
    frontier_.swap(next_frontier_);
  }

  // Counters persist across waves within one call, so an edge becomes a
  // candidate only in waves where its count changed; a wave that activates no
  // node leaves every count unchanged and the loop stops.

  if (out) {
    out->activated_nodes = active_list_;
    std::sort(out->activated_nodes.begin(), out->activated_nodes.end());
    out->activated_edges = fired_list_;
    std::sort(out->activated_edges.begin(), out->activated_edges.end());
  }
  return active_count;
}

std::uint32_t CascadeEngine::spread_size(std::span<const NodeId> seeds, double p,
                                         std::uint32_t max_waves) {
  return propagate(seeds, p, max_waves, nullptr, false);
}

CascadeResult CascadeEngine::run(std::span<const NodeId> seeds, double p, std::uint32_t max_waves,
                                 bool keep_trace) {
  CascadeResult result;
  propagate(seeds, p, max_waves, &result, keep_trace);
  return result;
}

CascadeResult simulate_threshold(const Hypergraph& h, std::span<const NodeId> seeds, double p,
                                 bool keep_trace) {
  CascadeEngine engine(h);
  return engine.run(seeds, p, CascadeEngine::kUnbounded, keep_trace);
}

std::vector<NodeId> two_layer_spread(const Hypergraph& h, std::span<const NodeId> seeds, double p) {
  CascadeEngine engine(h);
  return engine.run(seeds, p, 2, false).activated_nodes;
}

std::uint32_t two_layer_fitness(const Hypergraph& h, std::span<const NodeId> seeds, double p) {
  CascadeEngine engine(h);
  return engine.spread_size(seeds, p, 2);
}

std::vector<std::uint32_t> evaluate_population(const Hypergraph& h,
                                               const std::vector<std::vector<NodeId>>& positions,
                                               double p, Execution exec) {
  std::vector<std::uint32_t> fitness(positions.size());
  const int workers = max_worker_count();
  std::vector<CascadeEngine> engines;
  engines.reserve(workers);
  for (int w = 0; w < workers; ++w) engines.emplace_back(h);

  for_each_index(positions.size(), exec, [&](std::size_t i) {
    fitness[i] = engines[worker_index()].spread_size(positions[i], p, 2);
  });
  return fitness;
}

}  // namespace hyperim
