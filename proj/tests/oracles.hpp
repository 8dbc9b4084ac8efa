// Independent reference implementations used to check the engine. These work
// directly on the member lists with plain set algebra and full re-scans, so
// they share no code path with the counter-based engine they verify.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"

namespace oracle {

using hyperim::EdgeId;
using hyperim::Hypergraph;
using hyperim::NodeId;

inline bool edge_fires(const Hypergraph& h, EdgeId e, const std::set<NodeId>& active, double p) {
  auto members = h.edge_members(e);
  std::size_t count = 0;
  for (NodeId v : members) count += active.count(v);
  return static_cast<double>(count) / static_cast<double>(members.size()) >= p;
}

struct FixpointResult {
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
};

// Chaotic sweep: rescan every inactive hyperedge until nothing changes. The
// least fixpoint of a monotone operator does not depend on the sweep order.
inline FixpointResult naive_threshold_fixpoint(const Hypergraph& h, const std::set<NodeId>& seeds,
                                               double p) {
  FixpointResult result;
  result.nodes = seeds;
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (result.edges.count(e)) continue;
      if (!edge_fires(h, e, result.nodes, p)) continue;
      result.edges.insert(e);
      for (NodeId v : h.edge_members(e)) result.nodes.insert(v);
      changed = true;
    }
  }
  return result;
}

// Two activation layers: hyperedges fire against the seeds, then against the
// active set after the first layer.
inline std::set<NodeId> naive_two_layer(const Hypergraph& h, const std::set<NodeId>& seeds,
                                        double p) {
  std::set<NodeId> active = seeds;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (edge_fires(h, e, seeds, p)) {
      for (NodeId v : h.edge_members(e)) active.insert(v);
    }
  }
  std::set<NodeId> after_first = active;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (edge_fires(h, e, after_first, p)) {
      for (NodeId v : h.edge_members(e)) active.insert(v);
    }
  }
  return active;
}

// Random raw hypergraph for property tests; retries until construction
// succeeds (small inputs may drop every candidate edge).
inline Hypergraph random_hypergraph(hyperim::Rng& rng, std::uint32_t max_n, std::uint32_t max_m) {
  for (;;) {
    const std::uint32_t n = 3 + rng.below_u32(max_n - 2);
    const std::uint32_t m = 1 + rng.below_u32(max_m);
    std::vector<std::vector<std::uint64_t>> edges(m);
    for (auto& edge : edges) {
      const std::uint32_t size = 2 + rng.below_u32(std::min<std::uint32_t>(4, n - 1));
      for (std::uint32_t i = 0; i < size; ++i) edge.push_back(rng.below(n));
    }
    try {
      return Hypergraph::from_hyperedges(edges);
    } catch (const std::exception&) {
      continue;
    }
  }
}

template <class A, class B>
bool is_subset(const A& small, const B& big) {
  for (const auto& value : small) {
    if (!std::binary_search(big.begin(), big.end(), value)) return false;
  }
  return true;
}

}  // namespace oracle
