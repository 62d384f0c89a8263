#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ggbench {

// Deterministic 64-bit generator (splitmix64). Used instead of the std
// distributions so that seeded values are identical across standard
// libraries and platforms; frozen golden values depend on this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    // rejection to avoid modulo bias
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double uniform01() {  // [0, 1) with 53 bits
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t hash_str(std::string_view s) {
  // FNV-1a 64
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives an independent child seed from a master seed and a lineage of
// labels/indices, so that trial i's stream depends only on (master, path).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index = 0) {
  Rng mix(master ^ (hash_str(label) + 0x9e3779b97f4a7c15ULL * (index + 1)));
  mix.next();
  return mix.next();
}

}  // namespace ggbench
