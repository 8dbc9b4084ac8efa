#include "hyperim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace hyperim {

namespace {

// Mean of Poisson(lambda) conditioned on [2, n].
double truncated_poisson_mean(double lambda, std::uint32_t n) {
  double pmf = std::exp(-lambda);  // P(0)
  double mass = 0.0, weighted = 0.0;
  for (std::uint32_t k = 1; k <= n; ++k) {
    pmf *= lambda / k;
    if (k >= 2) {
      mass += pmf;
      weighted += static_cast<double>(k) * pmf;
    }
    if (k > lambda && pmf < 1e-300) break;
  }
  if (mass <= 0.0) return 2.0;
  return weighted / mass;
}

// Rate whose [2, n]-truncated Poisson mean equals `target`. Conditioning on
// size >= 2 inflates the mean, so the raw rate would overshoot; bisection
// keeps the empirical edge-size average on target.
double calibrate_poisson_rate(double target, std::uint32_t n) {
  if (target > 600.0) return target;  // truncation negligible, avoid underflow
  double lo = 1e-9, hi = target;
  while (truncated_poisson_mean(hi, n) < target && hi < 4.0 * target + 64.0) hi *= 1.5;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (truncated_poisson_mean(mid, n) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::uint32_t sample_poisson(Rng& rng, double lambda) {
  // Knuth's product method, chunked to avoid exp underflow for large rates.
  std::uint32_t total = 0;
  double remaining = lambda;
  while (remaining > 0.0) {
    const double chunk = std::min(remaining, 30.0);
    const double limit = std::exp(-chunk);
    double product = 1.0;
    std::uint32_t k = 0;
    for (;;) {
      product *= rng.uniform();
      if (product <= limit) break;
      ++k;
    }
    total += k;
    remaining -= chunk;
  }
  return total;
}

// k distinct values from [0, n), uniformly (Robert Floyd).
void sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k, std::vector<NodeId>& out) {
  out.clear();
  for (std::uint32_t i = n - k; i < n; ++i) {
    const NodeId candidate = rng.below_u32(i + 1);
    if (std::find(out.begin(), out.end(), candidate) != out.end()) {
      out.push_back(i);
    } else {
      out.push_back(candidate);
    }
  }
}

Hypergraph build(const std::vector<std::vector<NodeId>>& edges) {
  std::vector<std::vector<std::uint64_t>> widened(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    widened[e].assign(edges[e].begin(), edges[e].end());
  }
  return Hypergraph::from_hyperedges(widened);
}

}  // namespace

Hypergraph gen_er(std::uint32_t n, std::uint32_t m, double mean_size, Rng& rng) {
  if (n < 2) throw std::invalid_argument("gen_er: n must be >= 2");
  if (m < 1) throw std::invalid_argument("gen_er: m must be >= 1");
  if (mean_size < 2.0 || mean_size > static_cast<double>(n)) {
    throw std::invalid_argument("gen_er: mean edge size must lie in [2, n]");
  }

  const double rate = calibrate_poisson_rate(mean_size, n);
  std::vector<std::vector<NodeId>> edges(m);
  std::vector<NodeId> members;
  for (std::uint32_t e = 0; e < m; ++e) {
    std::uint32_t size = 0;
    do {
      size = sample_poisson(rng, rate);
    } while (size < 2 || size > n);
    sample_distinct(rng, n, size, members);
    edges[e] = members;
  }
  return build(edges);
}

Hypergraph gen_sf(std::uint32_t n, std::uint32_t m, double lambda, Rng& rng) {
  if (n < 2) throw std::invalid_argument("gen_sf: n must be >= 2");
  if (m < 1) throw std::invalid_argument("gen_sf: m must be >= 1");
  if (!(lambda < 0.0)) throw std::invalid_argument("gen_sf: exponent must be negative");

  // Hyperdegree targets from P(k) ∝ k^lambda on [1, n-1].
  const std::uint32_t k_max = n - 1;
  std::vector<double> cdf(k_max);
  double total_weight = 0.0;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    total_weight += std::pow(static_cast<double>(k), lambda);
    cdf[k - 1] = total_weight;
  }

  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < n; ++v) {
    const double u = rng.uniform() * total_weight;
    const std::uint32_t k =
        static_cast<std::uint32_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) + 1;
    for (std::uint32_t i = 0; i < k; ++i) stubs.push_back(v);
  }

  const std::uint64_t total = stubs.size();
  if (total < 2ULL * m) {
    throw std::runtime_error("gen_sf: not enough stubs (" + std::to_string(total) +
                             ") to fill " + std::to_string(m) + " hyperedges of size >= 2");
  }

  // Edge sizes as equal as possible: the first (total mod m) edges get the
  // larger size.
  const std::uint32_t base = static_cast<std::uint32_t>(total / m);
  const std::uint32_t larger = static_cast<std::uint32_t>(total % m);

  std::vector<std::vector<NodeId>> edges(m);
  std::size_t pool = stubs.size();
  for (std::uint32_t e = 0; e < m; ++e) {
    const std::uint32_t want = base + (e < larger ? 1 : 0);
    auto& edge = edges[e];
    edge.clear();
    for (std::uint32_t slot = 0; slot < want && pool > 0; ++slot) {
      bool placed = false;
      for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t idx = rng.below(pool);
        const NodeId v = stubs[idx];
        if (std::find(edge.begin(), edge.end(), v) == edge.end()) {
          edge.push_back(v);
          stubs[idx] = stubs[--pool];
          placed = true;
          break;
        }
      }
      if (!placed) {
        // every sampled stub duplicated a member; scan for any usable one
        std::size_t found = pool;
        for (std::size_t idx = 0; idx < pool; ++idx) {
          if (std::find(edge.begin(), edge.end(), stubs[idx]) == edge.end()) {
            found = idx;
            break;
          }
        }
        if (found == pool) break;  // only duplicates remain, close the edge
        edge.push_back(stubs[found]);
        stubs[found] = stubs[--pool];
      }
    }
    // degenerate endgame repair: keep m exact by padding with a fresh node
    while (edge.size() < 2) {
      const NodeId v = rng.below_u32(n);
      if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
    }
  }
  return build(edges);
}

Hypergraph gen_kuniform(std::uint32_t n, std::uint32_t m, std::uint32_t k_u, Rng& rng) {
  if (n < 2) throw std::invalid_argument("gen_kuniform: n must be >= 2");
  if (m < 1) throw std::invalid_argument("gen_kuniform: m must be >= 1");
  if (k_u < 2 || k_u > n) throw std::invalid_argument("gen_kuniform: edge size must lie in [2, n]");

  std::vector<std::vector<NodeId>> edges(m);
  std::vector<NodeId> members;
  for (std::uint32_t e = 0; e < m; ++e) {
    sample_distinct(rng, n, k_u, members);
    edges[e] = members;
  }
  return build(edges);
}

void GeneratorSpec::validate() const {
  if (n < 2) throw std::invalid_argument("generator spec: n must be >= 2");
  if (m < 1) throw std::invalid_argument("generator spec: m must be >= 1");
  switch (family) {
    case Family::er:
      if (feature < 2.0) throw std::invalid_argument("generator spec: ER mean size must be >= 2");
      break;
    case Family::sf:
      if (!(feature < 0.0)) throw std::invalid_argument("generator spec: SF exponent must be < 0");
      break;
    case Family::kuf:
      if (feature < 2.0 || feature > static_cast<double>(n)) {
        throw std::invalid_argument("generator spec: uniform size must lie in [2, n]");
      }
      break;
  }
}

Hypergraph generate(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.rng_seed);
  switch (spec.family) {
    case Family::er:
      return gen_er(spec.n, spec.m, spec.feature, rng);
    case Family::sf:
      return gen_sf(spec.n, spec.m, spec.feature, rng);
    case Family::kuf:
      return gen_kuniform(spec.n, spec.m, static_cast<std::uint32_t>(spec.feature), rng);
  }
  throw std::logic_error("unknown generator family");
}

Family family_from_string(const std::string& name) {
  if (name == "er") return Family::er;
  if (name == "sf") return Family::sf;
  if (name == "kuf") return Family::kuf;
  throw std::invalid_argument("unknown generator family: " + name + " (expected er|sf|kuf)");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::er:
      return "er";
    case Family::sf:
      return "sf";
    case Family::kuf:
      return "kuf";
  }
  return "?";
}

std::string GeneratorSpec::label() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s-%u-%u-%g", family_name(family), n, m, feature);
  return buf;
}

std::string GeneratorSpec::provenance() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "spec: family=%s n=%u m=%u feature=%g seed=%llu",
                family_name(family), n, m, feature,
                static_cast<unsigned long long>(rng_seed));
  return buf;
}

}  // namespace hyperim
