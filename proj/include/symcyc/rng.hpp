#pragma once

#include <cstdint>
#include <vector>

namespace symcyc {

// SplitMix64. Reproducible sweeps need an engine whose byte stream is pinned by
// the seed alone, independent of platform and standard-library version.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n); n is tiny here so modulo bias is irrelevant.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace symcyc
