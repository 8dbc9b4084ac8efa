#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"

namespace hyperim {

namespace {

// Mean local clustering coefficient of the clique expansion. Nodes with
// degree < 2 contribute 0.
double mean_clustering(const Hypergraph& h, Execution exec) {
  const NodeId n = h.node_count();
  std::vector<double> local(n, 0.0);
  for_each_index(n, exec, [&](std::size_t vi) {
    const NodeId v = static_cast<NodeId>(vi);
    auto nb = h.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 2) return;
    // Count expansion edges among the neighbors of v.
    std::uint64_t links = 0;
    for (std::size_t i = 0; i < d; ++i) {
      auto nb_i = h.neighbors(nb[i]);
      // both lists sorted: intersect nb_i with nb[i+1..]
      std::size_t a = 0, b = i + 1;
      while (a < nb_i.size() && b < d) {
        if (nb_i[a] == nb[b]) {
          ++links;
          ++a;
          ++b;
        } else if (nb_i[a] < nb[b]) {
          ++a;
        } else {
          ++b;
        }
      }
    }
    local[vi] = 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
  });
  double sum = 0.0;
  for (double c : local) sum += c;
  return sum / n;
}

struct DistanceSummary {
  std::uint64_t total = 0;  // sum of d(u,v) over ordered pairs
  std::uint32_t diameter = 0;
};

DistanceSummary all_pairs_bfs(const Hypergraph& h, Execution exec) {
  const NodeId n = h.node_count();
  std::vector<std::uint64_t> row_sum(n, 0);
  std::vector<std::uint32_t> row_max(n, 0);

  const int workers = max_worker_count();
  std::vector<std::vector<std::uint32_t>> dist_scratch(workers);
  std::vector<std::vector<NodeId>> queue_scratch(workers);

#ifdef _OPENMP
#pragma omp parallel if (exec == Execution::parallel)
#endif
  {
    auto& dist = dist_scratch[worker_index()];
    auto& queue = queue_scratch[worker_index()];
    dist.assign(n, UINT32_MAX);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const NodeId source = static_cast<NodeId>(si);
      queue.clear();
      queue.push_back(source);
      dist[source] = 0;
      std::uint64_t sum = 0;
      std::uint32_t far = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        const std::uint32_t dv = dist[v];
        sum += dv;
        far = std::max(far, dv);
        for (NodeId u : h.neighbors(v)) {
          if (dist[u] == UINT32_MAX) {
            dist[u] = dv + 1;
            queue.push_back(u);
          }
        }
      }
      row_sum[si] = sum;
      row_max[si] = far;
      for (NodeId v : queue) dist[v] = UINT32_MAX;  // cheap reset, queue holds all reached
    }
  }

  DistanceSummary out;
  for (NodeId v = 0; v < n; ++v) {
    out.total += row_sum[v];
    out.diameter = std::max(out.diameter, row_max[v]);
  }
  return out;
}

}  // namespace

StatsReport summary_stats(const Hypergraph& h, Execution exec) {
  const NodeId n = h.node_count();
  if (n < 2) throw std::invalid_argument("summary_stats requires n >= 2");
  if (!h.is_connected()) {
    throw std::invalid_argument(
        "summary_stats requires a connected hypergraph; "
        "extract the largest connected component first");
  }

  StatsReport r;
  r.n = n;
  r.m = h.edge_count();

  std::uint64_t degree_sum = 0;
  for (NodeId v = 0; v < n; ++v) degree_sum += h.degree(v);
  r.avg_degree = static_cast<double>(degree_sum) / n;
  r.avg_hyperdegree = static_cast<double>(h.total_incidence()) / n;
  r.avg_hyperedge_size = static_cast<double>(h.total_incidence()) / r.m;

  r.clustering_coefficient = mean_clustering(h, exec);

  const DistanceSummary d = all_pairs_bfs(h, exec);
  r.avg_shortest_path =
      static_cast<double>(d.total) / (static_cast<double>(n) * (n - 1));
  r.diameter = d.diameter;
  // degree_sum counts each expansion edge twice.
  r.edge_density = static_cast<double>(degree_sum) / (static_cast<double>(n) * (n - 1));
  return r;
}

const char* StatsReport::csv_header() {
  return "n,m,avg_deg,avg_hyperdeg,avg_edge_size,clustering,avg_path,diameter,density";
}

std::string StatsReport::to_csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%u,%u,%.4f,%.4f,%.4f,%.4f,%.4f,%u,%.4f", n, m, avg_degree,
                avg_hyperdegree, avg_hyperedge_size, clustering_coefficient, avg_shortest_path,
                diameter, edge_density);
  return buf;
}

}  // namespace hyperim
