#pragma once

#include <cstdint>
#include <string>

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"

namespace hyperim {

enum class Family { er, sf, kuf };

// Parameters of a synthetic hypergraph. `feature` is family-specific:
// ER -> mean hyperedge size, SF -> power-law exponent (< 0), KUF -> uniform
// hyperedge cardinality.
struct GeneratorSpec {
  Family family = Family::er;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  double feature = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
  std::string label() const;       // e.g. "er-2000-1000-3"
  std::string provenance() const;  // sidecar comment for generated files
};

// Random hypergraph with m hyperedges whose sizes follow a Poisson
// distribution truncated to [2, n]; the underlying rate is calibrated so the
// truncated mean equals mean_size. Members are sampled uniformly without
// replacement.
Hypergraph gen_er(std::uint32_t n, std::uint32_t m, double mean_size, Rng& rng);

// Configuration-model hypergraph: node hyperdegree targets follow
// P(k) ∝ k^lambda on [1, n-1]; the stubs are dealt into m hyperedges of
// near-equal size, resampling stubs that would duplicate a member.
Hypergraph gen_sf(std::uint32_t n, std::uint32_t m, double lambda, Rng& rng);

// Exactly m hyperedges, each with exactly k_u distinct members sampled
// uniformly without replacement.
Hypergraph gen_kuniform(std::uint32_t n, std::uint32_t m, std::uint32_t k_u, Rng& rng);

Hypergraph generate(const GeneratorSpec& spec);

Family family_from_string(const std::string& name);
const char* family_name(Family family);

}  // namespace hyperim
