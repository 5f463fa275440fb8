#include "symcyc/pair_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symcyc {

namespace {

void require_t(int t) { require_ground_size(t); }

void require_even_t(int t) {
  require_t(t);
  if (t % 2 != 0) throw std::invalid_argument("statistic requires even t");
}

CountValue pow2(int t) {
  CountValue v{1};
  for (int i = 0; i < t; ++i) v *= CountValue{2};
  return v;
}

}  // namespace

CountValue pairs_at_distance(int t, int k) {
  require_t(t);
  if (k < 0 || k > t) throw std::invalid_argument("distance k outside [0, t]");
  return pow2(t) * binomial(t, k);
}

CountValue orthogonal_pairs(int t) {
  require_even_t(t);
  return pow2(t) * binomial(t, t / 2);
}

CountValue mutual_orthogonal_count(int t) {
  require_even_t(t);
  if (t % 4 != 0) return CountValue{};
  return binomial(t / 2, t / 4) * binomial(t / 2, t / 4);
}

CountValue pairs_with_negparts_at_distance(int t, int j1, int j2, int k) {
  require_t(t);
  if (j1 < 0 || j1 > t || j2 < 0 || j2 > t || k < 0 || k > t)
    throw std::invalid_argument("negative-part sizes and distance must lie in [0, t]");
  if ((j1 + j2 + k) % 2 != 0) return CountValue{};
  return binomial(t, k) * binomial(t - k, (j1 + j2 - k) / 2) * binomial(k, (j1 - j2 + k) / 2);
}

CountValue orthogonal_pairs_with_negparts(int t, int j1, int j2) {
  require_even_t(t);
  if (j1 < 0 || j1 > t || j2 < 0 || j2 > t)
    throw std::invalid_argument("negative-part sizes must lie in [0, t]");
  if ((j1 + j2 + t / 2) % 2 != 0) return CountValue{};
  return binomial(t, t / 2) * binomial(t / 2, (2 * j1 + 2 * j2 - t) / 4) *
         binomial(t / 2, (2 * j1 - 2 * j2 + t) / 4);
}

CountValue johnson_layer_pairs(int t, int s, int i) {
  require_t(t);
  if (s < 1 || s > t) throw std::invalid_argument("layer s outside [1, t]");
  if (i < 0 || i > s) throw std::invalid_argument("dissimilarity i outside [0, s]");
  return binomial(t, 2 * i) * binomial(t - 2 * i, s - i) * binomial(2 * i, i);
}

CountValue johnson_orthogonal_pairs(int t, int s) {
  require_t(t);
  if (s < 1 || s > t) throw std::invalid_argument("layer s outside [1, t]");
  if (t % 4 != 0 || s < t / 4 || s > 3 * t / 4) return CountValue{};
  return binomial(t, t / 2) * binomial(t / 2, s - t / 4) * binomial(t / 2, t / 4);
}

CountValue johnson_mutual_count(int t, int s) {
  require_t(t);
  if (t % 4 != 0 || s < t / 4 || s > 3 * t / 4)
    throw std::invalid_argument("johnson_mutual_count requires 4|t and t/4 <= s <= 3t/4");
  CountValue total;
  const int lo = std::max(0, s - t / 2);
  const int hi = std::min(t / 4, s - t / 4);
  for (int c = lo; c <= hi; ++c) {
    CountValue sq = binomial(t / 4, s - t / 4 - c);
    total += binomial(s - t / 4, c) * binomial(3 * t / 4 - s, t / 4 - c) * sq * sq;
  }
  return total;
}

namespace oracle {

namespace {

inline int dist(Mask x, Mask y) { return __builtin_popcount(x ^ y); }
inline int dot(int t, Mask x, Mask y) { return t - 2 * dist(x, y); }
inline int negsize(Mask x) { return __builtin_popcount(x); }

}  // namespace

std::uint64_t pairs_at_distance(int t, int k) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x)
    for (Mask y = 0; y < n; ++y) hits += dist(x, y) == k;
  return hits;
}

std::uint64_t orthogonal_pairs(int t) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x)
    for (Mask y = 0; y < n; ++y) hits += dot(t, x, y) == 0;
  return hits;
}

std::uint64_t pairs_with_negparts_at_distance(int t, int j1, int j2, int k) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x) {
    if (negsize(x) != j1) continue;
    for (Mask y = 0; y < n; ++y) hits += negsize(y) == j2 && dist(x, y) == k;
  }
  return hits;
}

std::uint64_t orthogonal_pairs_with_negparts(int t, int j1, int j2) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x) {
    if (negsize(x) != j1) continue;
    for (Mask y = 0; y < n; ++y) hits += negsize(y) == j2 && dot(t, x, y) == 0;
  }
  return hits;
}

std::uint64_t johnson_layer_pairs(int t, int s, int i) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x) {
    if (negsize(x) != s) continue;
    for (Mask y = 0; y < n; ++y)
      hits += negsize(y) == s && s - __builtin_popcount(x & y) == i;
  }
  return hits;
}

std::uint64_t johnson_orthogonal_pairs(int t, int s) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask x = 0; x < n; ++x) {
    if (negsize(x) != s) continue;
    for (Mask y = 0; y < n; ++y) hits += negsize(y) == s && dot(t, x, y) == 0;
  }
  return hits;
}

std::uint64_t mutual_orthogonal_count(int t, Mask x, Mask y) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask z = 0; z < n; ++z) hits += dot(t, z, x) == 0 && dot(t, z, y) == 0;
  return hits;
}

std::uint64_t johnson_mutual_count(int t, int s, Mask x, Mask y) {
  const Mask n = Mask{1} << t;
  std::uint64_t hits = 0;
  for (Mask z = 0; z < n; ++z)
    hits += negsize(z) == s && dot(t, z, x) == 0 && dot(t, z, y) == 0;
  return hits;
}

std::pair<Mask, Mask> random_orthogonal_pair(int t, SplitMix64& rng) {
  if (t % 2 != 0) throw std::invalid_argument("orthogonal pairs need even t");
  const Mask n = Mask{1} << t;
  for (;;) {
    Mask x = static_cast<Mask>(rng.below(n));
    Mask y = static_cast<Mask>(rng.below(n));
    if (dot(t, x, y) == 0) return {x, y};
  }
}

std::pair<Mask, Mask> random_orthogonal_layer_pair(int t, int s, SplitMix64& rng) {
  if (t % 4 != 0 || s < t / 4 || s > 3 * t / 4)
    throw std::invalid_argument("layer-orthogonal pairs need 4|t and t/4 <= s <= 3t/4");
  const Mask n = Mask{1} << t;
  for (;;) {
    Mask x = static_cast<Mask>(rng.below(n));
    Mask y = static_cast<Mask>(rng.below(n));
    if (negsize(x) == s && negsize(y) == s && dot(t, x, y) == 0) return {x, y};
  }
}

}  // namespace oracle

}  // namespace symcyc
