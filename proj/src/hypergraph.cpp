#include "hyperim/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hyperim {

Hypergraph Hypergraph::from_hyperedges(const std::vector<std::vector<std::uint64_t>>& edges) {
  if (edges.empty()) throw std::invalid_argument("hypergraph construction: empty hyperedge list");

  // Collapse duplicates within each edge, drop edges with < 2 distinct members.
  std::vector<std::vector<std::uint64_t>> kept;
  kept.reserve(edges.size());
  for (const auto& edge : edges) {
    std::vector<std::uint64_t> members(edge);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() >= 2) kept.push_back(std::move(members));
  }
  if (kept.empty()) {
    throw std::invalid_argument("hypergraph construction: no hyperedge with >= 2 distinct members");
  }

  // Stable ascending compaction of the surviving original ids.
  std::vector<std::uint64_t> ids;
  for (const auto& edge : kept) ids.insert(ids.end(), edge.begin(), edge.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  Hypergraph h;
  h.original_ids_ = ids;
  const auto compact = [&](std::uint64_t original) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), original) - ids.begin());
  };

  h.edges_.reserve(kept.size());
  for (const auto& edge : kept) {
    EdgeRange range{static_cast<std::uint32_t>(h.edge_member_pool_.size()),
                    static_cast<std::uint32_t>(edge.size())};
    for (std::uint64_t original : edge) h.edge_member_pool_.push_back(compact(original));
    h.edges_.push_back(range);
  }
  h.total_incidence_ = h.edge_member_pool_.size();
  h.build_indexes();
  return h;
}

void Hypergraph::build_indexes() {
  const std::size_t n = original_ids_.size();
  const std::size_t m = edges_.size();

  // node -> incident edges (counting sort over the member pool).
  std::vector<std::uint32_t> counts(n, 0);
  for (NodeId v : edge_member_pool_) ++counts[v];
  node_to_edges_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) node_to_edges_offsets_[v + 1] = node_to_edges_offsets_[v] + counts[v];
  incidence_pool_.resize(edge_member_pool_.size());
  std::vector<std::uint32_t> cursor(node_to_edges_offsets_.begin(), node_to_edges_offsets_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeRange& range = edges_[e];
    for (std::uint32_t i = 0; i < range.size; ++i) {
      NodeId v = edge_member_pool_[range.begin + i];
      incidence_pool_[cursor[v]++] = static_cast<EdgeId>(e);
    }
  }
  node_to_edges_.assign(counts.begin(), counts.end());

  // neighbor index: distinct co-members across incident edges.
  neighbor_offsets_.assign(n + 1, 0);
  std::vector<NodeId> scratch;
  std::vector<std::vector<NodeId>> per_node(n);
  for (NodeId v = 0; v < n; ++v) {
    scratch.clear();
    for (std::uint32_t i = node_to_edges_offsets_[v]; i < node_to_edges_offsets_[v + 1]; ++i) {
      EdgeId e = incidence_pool_[i];
      const EdgeRange& range = edges_[e];
      for (std::uint32_t j = 0; j < range.size; ++j) {
        NodeId u = edge_member_pool_[range.begin + j];
        if (u != v) scratch.push_back(u);
      }
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    per_node[v] = scratch;
    neighbor_offsets_[v + 1] = neighbor_offsets_[v] + static_cast<std::uint32_t>(scratch.size());
  }
  neighbor_pool_.resize(neighbor_offsets_[n]);
  for (NodeId v = 0; v < n; ++v) {
    std::copy(per_node[v].begin(), per_node[v].end(), neighbor_pool_.begin() + neighbor_offsets_[v]);
  }
}

void Hypergraph::check_node(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (n=" +
                            std::to_string(node_count()) + ")");
  }
}

std::span<const NodeId> Hypergraph::edge_members(EdgeId e) const {
  if (e >= edge_count()) throw std::out_of_range("hyperedge id out of range");
  const EdgeRange& range = edges_[e];
  return {edge_member_pool_.data() + range.begin, range.size};
}

std::span<const EdgeId> Hypergraph::incident_edges(NodeId v) const {
  check_node(v);
  return {incidence_pool_.data() + node_to_edges_offsets_[v],
          node_to_edges_offsets_[v + 1] - node_to_edges_offsets_[v]};
}

std::span<const NodeId> Hypergraph::neighbors(NodeId v) const {
  check_node(v);
  return {neighbor_pool_.data() + neighbor_offsets_[v],
          neighbor_offsets_[v + 1] - neighbor_offsets_[v]};
}

std::uint32_t Hypergraph::degree(NodeId v) const {
  check_node(v);
  return neighbor_offsets_[v + 1] - neighbor_offsets_[v];
}

std::uint32_t Hypergraph::hyperdegree(NodeId v) const {
  check_node(v);
  return node_to_edges_offsets_[v + 1] - node_to_edges_offsets_[v];
}

std::uint32_t Hypergraph::adjacency_count(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("adjacency_count is undefined on the diagonal");
  auto eu = incident_edges(u);
  auto ev = incident_edges(v);
  std::uint32_t shared = 0;
  std::size_t i = 0, j = 0;
  while (i < eu.size() && j < ev.size()) {
    if (eu[i] == ev[j]) {
      ++shared;
      ++i;
      ++j;
    } else if (eu[i] < ev[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return shared;
}

bool Hypergraph::adjacent(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

NodeId Hypergraph::to_compact(std::uint64_t original) const {
  auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
  if (it == original_ids_.end() || *it != original) {
    throw std::out_of_range("node id " + std::to_string(original) + " not present in hypergraph");
  }
  return static_cast<NodeId>(it - original_ids_.begin());
}

Hypergraph Hypergraph::largest_connected_component() const {
  const NodeId n = node_count();
  std::vector<std::int32_t> component(n, -1);
  std::vector<NodeId> queue;
  std::int32_t component_count = 0;
  std::vector<std::uint32_t> sizes;

  for (NodeId start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    queue.clear();
    queue.push_back(start);
    component[start] = component_count;
    std::uint32_t size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId v = queue[head];
      ++size;
      for (NodeId u : neighbors(v)) {
        if (component[u] < 0) {
          component[u] = component_count;
          queue.push_back(u);
        }
      }
    }
    sizes.push_back(size);
    ++component_count;
  }

  // Components are discovered in ascending min-node order, so the first
  // maximum already implements the smallest-original-id tie break.
  std::int32_t best = 0;
  for (std::int32_t c = 1; c < component_count; ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }

  std::vector<std::vector<std::uint64_t>> kept_edges;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto members = edge_members(e);
    if (component[members.front()] != best) continue;
    std::vector<std::uint64_t> edge;
    edge.reserve(members.size());
    for (NodeId v : members) edge.push_back(original_ids_[v]);
    kept_edges.push_back(std::move(edge));
  }
  return from_hyperedges(kept_edges);
}

bool Hypergraph::is_connected() const {
  const NodeId n = node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> queue{0};
  seen[0] = true;
  std::size_t reached = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    ++reached;
    for (NodeId u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return reached == n;
}

Hypergraph parse_hyperedge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hyperedge file: " + path);

  std::vector<std::vector<std::uint64_t>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::uint64_t> edge;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::runtime_error(path + ": parse error at line " + std::to_string(line_no) +
                                 ": bad node id '" + token + "'");
      }
      edge.push_back(value);
    }
    if (!edge.empty()) edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw std::runtime_error(path + ": no hyperedges found");
  return Hypergraph::from_hyperedges(edges);
}

void serialize_hyperedge_file(const Hypergraph& h, const std::string& path,
                              const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write hyperedge file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto members = h.edge_members(e);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out << ' ';
      out << h.original_id(members[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hyperim
