#include "symcyc/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace symcyc {

namespace {

// binom(n,k) fits in uint64 for all n <= 62.
constexpr int kSmallBinomialMax = 62;
constexpr long long kLargeBinomialCap = 4096;

const std::vector<std::vector<std::uint64_t>>& small_binomial_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> rows(kSmallBinomialMax + 1);
    for (int n = 0; n <= kSmallBinomialMax; ++n) {
      rows[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

}  // namespace

CountValue binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return CountValue{};
  if (n <= kSmallBinomialMax) return CountValue{small_binomial_table()[n][k]};
  if (n > kLargeBinomialCap)
    throw std::invalid_argument("binomial argument exceeds the supported cap");
  // Pascal row n, additions only: exact without division.
  std::vector<CountValue> row(n + 1);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

CountValue compositions(long long parts, long long total) {
  if (parts < 1 || total < 1)
    throw std::invalid_argument("compositions requires positive arguments");
  return binomial(total - 1, parts - 1);
}

CountValue kaplansky(long long n, long long k) {
  if (n < 0 || k < 0) return CountValue{};
  return binomial(n - k + 1, k);
}

CountValue fibonacci(long long n) {
  if (n < 0) throw std::invalid_argument("fibonacci of a negative index");
  CountValue prev{0}, cur{1};  // F_0, F_1
  if (n == 0) return prev;
  for (long long i = 1; i < n; ++i) {
    CountValue next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Memoized recursion f(counts, prev) = sum over letters c != prev with
// counts[c] > 0 of f(counts - e_c, c); base f(0, prev) = [prev = last].
template <class Memo, class Key>
struct SmirnovDp {
  int alphabet;
  int last;
  Memo memo;

  CountValue run(std::vector<int>& counts, int prev) {
    if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; }))
      return CountValue{prev == last ? 1u : 0u};
    const Key key = Key::make(counts, prev);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    CountValue total;
    for (int c = 0; c < alphabet; ++c) {
      if (c == prev || counts[c] == 0) continue;
      --counts[c];
      total += run(counts, c);
      ++counts[c];
    }
    memo.emplace(key, total);
    return total;
  }
};

struct PackedKey {
  std::uint64_t v;
  static PackedKey make(const std::vector<int>& counts, int prev) {
    std::uint64_t key = static_cast<std::uint64_t>(prev);
    for (int c : counts) key = (key << 10) | static_cast<std::uint64_t>(c);
    return {key};
  }
  friend bool operator==(PackedKey a, PackedKey b) { return a.v == b.v; }
};

struct PackedKeyHash {
  std::size_t operator()(PackedKey k) const { return std::hash<std::uint64_t>{}(k.v); }
};

struct VectorKey {
  std::vector<int> counts;
  int prev;
  static VectorKey make(const std::vector<int>& counts, int prev) { return {counts, prev}; }
  friend bool operator<(const VectorKey& a, const VectorKey& b) {
    return std::tie(a.counts, a.prev) < std::tie(b.counts, b.prev);
  }
};

void check_smirnov_args(int alphabet, const std::vector<int>& parikh, int first, int last) {
  if (alphabet < 1) throw std::invalid_argument("alphabet size must be at least 1");
  if (static_cast<int>(parikh.size()) != alphabet)
    throw std::invalid_argument("Parikh vector length must equal the alphabet size");
  for (int c : parikh)
    if (c < 0) throw std::invalid_argument("Parikh entries must be nonnegative");
  if (first < 0 || first >= alphabet || last < 0 || last >= alphabet)
    throw std::invalid_argument("first/last letters must lie in the alphabet");
}

CountValue smirnov_count_uncached(int alphabet, const std::vector<int>& parikh, int first,
                                  int last) {
  std::vector<int> counts = parikh;
  --counts[first];
  const bool packable =
      alphabet <= 5 && std::all_of(counts.begin(), counts.end(), [](int c) { return c < 1024; });
  if (packable) {
    SmirnovDp<std::unordered_map<PackedKey, CountValue, PackedKeyHash>, PackedKey> dp{
        alphabet, last, {}};
    return dp.run(counts, first);
  }
  SmirnovDp<std::map<VectorKey, CountValue>, VectorKey> dp{alphabet, last, {}};
  return dp.run(counts, first);
}

}  // namespace

CountValue smirnov_count(int alphabet, const std::vector<int>& parikh, int first, int last) {
  check_smirnov_args(alphabet, parikh, first, last);
  if (parikh[first] == 0) return CountValue{};

  // Closed-form sweeps ask for the same tiny queries over and over; keep a
  // thread-confined cache of whole queries in front of the per-call memo.
  const bool cacheable =
      alphabet <= 4 &&
      std::all_of(parikh.begin(), parikh.end(), [](int c) { return c < 1024; });
  if (!cacheable) return smirnov_count_uncached(alphabet, parikh, first, last);

  std::uint64_t key = (static_cast<std::uint64_t>(alphabet) << 6) |
                      (static_cast<std::uint64_t>(first) << 3) |
                      static_cast<std::uint64_t>(last);
  for (int c : parikh) key = (key << 10) | static_cast<std::uint64_t>(c);
  thread_local std::unordered_map<std::uint64_t, CountValue> cache;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CountValue result = smirnov_count_uncached(alphabet, parikh, first, last);
  cache.emplace(key, result);
  return result;
}

CountValue smirnov_bruteforce(int alphabet, const std::vector<int>& parikh, int first,
                              int last) {
  check_smirnov_args(alphabet, parikh, first, last);
  const int total = std::accumulate(parikh.begin(), parikh.end(), 0);
  if (total > 12)
    throw std::invalid_argument("smirnov_bruteforce refuses Parikh sums above 12");
  if (total == 0) return CountValue{};

  std::vector<int> word;
  word.reserve(total);
  for (int c = 0; c < alphabet; ++c) word.insert(word.end(), parikh[c], c);

  std::uint64_t hits = 0;
  do {
    if (word.front() != first || word.back() != last) continue;
    bool smirnov = true;
    for (std::size_t i = 1; i < word.size() && smirnov; ++i) smirnov = word[i] != word[i - 1];
    hits += smirnov;
  } while (std::next_permutation(word.begin(), word.end()));
  return CountValue{hits};
}

}  // namespace symcyc
