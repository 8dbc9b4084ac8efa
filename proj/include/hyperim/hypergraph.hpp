#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperim/parallel.hpp"

namespace hyperim {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Immutable hypergraph. Nodes are compacted to 0..n-1 in ascending order of
// their original ids; the mapping is kept so results can be reported in the
// input's id space. Construction collapses duplicate members inside a
// hyperedge and drops hyperedges with fewer than two distinct members, so
// every node that survives has hyperdegree >= 1. Duplicate hyperedges are
// kept as distinct edges.
class Hypergraph {
 public:
  // `edges` holds member lists in original (uncompacted) ids.
  static Hypergraph from_hyperedges(const std::vector<std::vector<std::uint64_t>>& edges);

  NodeId node_count() const { return static_cast<NodeId>(node_to_edges_.size()); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  // Members of hyperedge e, sorted ascending.
  std::span<const NodeId> edge_members(EdgeId e) const;
  // Hyperedges containing v, sorted ascending.
  std::span<const EdgeId> incident_edges(NodeId v) const;
  // Distinct nodes sharing at least one hyperedge with v, sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const;

  // Number of distinct neighbors of v.
  std::uint32_t degree(NodeId v) const;
  // Number of hyperedges containing v.
  std::uint32_t hyperdegree(NodeId v) const;
  // Number of hyperedges containing both u and v. Requires u != v; the
  // diagonal is not defined here.
  std::uint32_t adjacency_count(NodeId u, NodeId v) const;

  bool adjacent(NodeId u, NodeId v) const;

  std::uint64_t original_id(NodeId v) const { return original_ids_[v]; }
  const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }
  // Maps an original id back to its compact id; throws if absent.
  NodeId to_compact(std::uint64_t original) const;

  std::uint64_t total_incidence() const { return total_incidence_; }

  // Sub-hypergraph induced by the largest component of the neighbor relation.
  // Ties between equal-size components go to the one containing the smallest
  // original node id. Hyperedges never straddle components.
  Hypergraph largest_connected_component() const;

  bool is_connected() const;

 private:
  Hypergraph() = default;
  void check_node(NodeId v) const;
  void build_indexes();

  // CSR-style storage for edge members and node->edge incidence.
  std::vector<NodeId> edge_member_pool_;
  std::vector<std::uint32_t> edge_offsets_;  // size m+1
  struct EdgeRange {
    std::uint32_t begin;
    std::uint32_t size;
  };
  std::vector<EdgeRange> edges_;

  std::vector<EdgeId> incidence_pool_;
  std::vector<std::uint32_t> node_to_edges_offsets_;  // size n+1
  std::vector<std::uint32_t> node_to_edges_;          // per-node sizes (kept for clarity)

  std::vector<NodeId> neighbor_pool_;
  std::vector<std::uint32_t> neighbor_offsets_;  // size n+1

  std::vector<std::uint64_t> original_ids_;
  std::uint64_t total_incidence_ = 0;
};

// Topological summary of a connected hypergraph. Clustering coefficient,
// average shortest path, diameter and density are defined on the clique
// expansion (ordinary graph with an edge wherever two nodes co-occur in some
// hyperedge).
struct StatsReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  double avg_degree = 0.0;
  double avg_hyperdegree = 0.0;
  double avg_hyperedge_size = 0.0;
  double clustering_coefficient = 0.0;
  double avg_shortest_path = 0.0;
  std::uint32_t diameter = 0;
  double edge_density = 0.0;

  static const char* csv_header();  // n,m,avg_deg,...
  std::string to_csv_row() const;
};

// Requires a connected hypergraph with n >= 2 (run
// largest_connected_component first).
StatsReport summary_stats(const Hypergraph& h, Execution exec = Execution::parallel);

// Hyperedge-list text format: one hyperedge per line, whitespace-separated
// decimal node ids, lines starting with '#' ignored.
Hypergraph parse_hyperedge_file(const std::string& path);
void serialize_hyperedge_file(const Hypergraph& h, const std::string& path,
                              const std::string& comment = "");

}  // namespace hyperim
