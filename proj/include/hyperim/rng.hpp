#pragma once

#include <cstdint>
#include <initializer_list>

namespace hyperim {

// Deterministic, stdlib-independent random engine (xoshiro256** seeded via
// splitmix64). All randomized components derive private streams from a master
// seed plus a path of integers, so results do not depend on evaluation order
// or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  // Hash-chains `path` onto `master` to produce an independent stream.
  static Rng derive(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = master;
    for (std::uint64_t part : path) {
      h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      std::uint64_t tmp = h;
      h = splitmix64(tmp);
    }
    return Rng(h);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  std::uint32_t below_u32(std::uint32_t n) { return static_cast<std::uint32_t>(below(n)); }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t state_[4];
};

}  // namespace hyperim
