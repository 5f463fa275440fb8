#include "symcyc/counting.hpp"

#include "symcyc/bigint.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace symcyc;

namespace {

// enumeration oracle for compositions of n into m positive parts
int count_compositions(int parts, int total) {
  if (parts == 0) return total == 0 ? 1 : 0;
  int sum = 0;
  for (int first = 1; first <= total; ++first) sum += count_compositions(parts - 1, total - first);
  return sum;
}

// enumeration oracle for k-subsets of a row of n with no two consecutive
int count_nonconsecutive(int n, int k) {
  int hits = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (__builtin_popcount(s) != k) continue;
    if ((s & (s << 1)) == 0) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("BigUint arithmetic against 64-bit ground truth") {
  CHECK(BigUint{0}.str() == "0");
  CHECK(BigUint{1234567890123456789ull}.str() == "1234567890123456789");
  CHECK((BigUint{1} + BigUint{2}) == BigUint{3});
  CHECK((BigUint{0xffffffffull} + BigUint{1}) == BigUint{0x100000000ull});
  CHECK((BigUint{1} < BigUint{2}));
  CHECK((BigUint{2} > BigUint{1}));
  std::uint64_t a = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t x = (a >> 20) % 1000003, y = (a >> 40) % 999983;
    CHECK((BigUint{x} * BigUint{y}) == BigUint{x * y});
    CHECK((BigUint{x} + BigUint{y}) == BigUint{x + y});
    a = a * 6364136223846793005ull + 1442695040888963407ull;
  }
  // 2^40 * 2^40 = 2^80, beyond 64 bits
  BigUint big = BigUint{1ull << 40} * BigUint{1ull << 40};
  CHECK(big.str() == "1208925819614629174706176");
  CHECK_FALSE(big.fits_u64());
  CHECK_THROWS_AS(big.as_u64(), std::overflow_error);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == BigUint{10});
  CHECK(binomial(3, 0) == BigUint{1});
  CHECK(binomial(2, 3) == BigUint{0});
  CHECK(binomial(-1, 0) == BigUint{0});
  CHECK(binomial(4, -1) == BigUint{0});
  // Pascal identity across the 64-bit-table / bignum-row boundary
  for (long long n : {61, 62, 63, 64, 70}) {
    for (long long k : {0ll, 1ll, n / 3, n / 2, n - 1, n}) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
  // row sums are powers of two
  BigUint sum, power{1};
  for (long long k = 0; k <= 70; ++k) sum += binomial(70, k);
  for (int i = 0; i < 70; ++i) power *= BigUint{2};
  CHECK(sum == power);
}

TEST_CASE("compositions") {
  for (int n = 1; n <= 9; ++n) CHECK(compositions(1, n) == BigUint{1});
  CHECK(compositions(2, 3) == BigUint{2});
  CHECK(compositions(3, 5) == BigUint{6});
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 9; ++n)
      CHECK(compositions(m, n) == BigUint{static_cast<std::uint64_t>(count_compositions(m, n))});
  CHECK_THROWS_AS(compositions(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(compositions(2, 0), std::invalid_argument);
}

TEST_CASE("kaplansky counts and the Fibonacci row sums") {
  for (int n = 0; n <= 10; ++n) CHECK(kaplansky(n, 0) == BigUint{1});
  CHECK(kaplansky(4, 2) == BigUint{3});
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(kaplansky(n, k) == BigUint{static_cast<std::uint64_t>(count_nonconsecutive(n, k))});
  for (int n = 1; n <= 20; ++n) {
    BigUint row;
    for (int k = 0; k <= (n + 1) / 2; ++k) row += kaplansky(n, k);
    CHECK(row == fibonacci(n + 2));
  }
}

TEST_CASE("fibonacci convention F_1 = F_2 = 1") {
  CHECK(fibonacci(0) == BigUint{0});
  CHECK(fibonacci(1) == BigUint{1});
  CHECK(fibonacci(2) == BigUint{1});
  CHECK(fibonacci(7) == BigUint{13});
  CHECK(fibonacci(50) == BigUint{12586269025ull});
}

TEST_CASE("Smirnov word counts, anchored instances") {
  // ternary alphabet (theta, alpha, beta) -> letters 0, 1, 2
  CHECK(smirnov_count(3, {1, 1, 1}, 0, 0) == BigUint{0});
  CHECK(smirnov_count(3, {1, 1, 1}, 0, 2) == BigUint{1});  // theta alpha beta
  CHECK(smirnov_count(3, {2, 1, 1}, 0, 0) == BigUint{2});  // theta alpha beta theta & mirror
  CHECK(smirnov_count(4, {1, 1, 0, 0}, 0, 1) == BigUint{1});  // theta alpha
  CHECK(smirnov_count(3, {0, 1, 0}, 1, 1) == BigUint{1});     // single-letter word
  CHECK(smirnov_count(3, {0, 1, 0}, 0, 0) == BigUint{0});     // first letter unavailable
  CHECK_THROWS_AS(smirnov_count(3, {1, 1}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(smirnov_count(3, {1, 1, 1}, 3, 0), std::invalid_argument);
}

TEST_CASE("Smirnov DP equals brute force for small Parikh vectors") {
  const int cap = 7;
  auto check_all_ends = [](int alphabet, const std::vector<int>& parikh) {
    for (int first = 0; first < alphabet; ++first)
      for (int last = 0; last < alphabet; ++last)
        CHECK(smirnov_count(alphabet, parikh, first, last) ==
              smirnov_bruteforce(alphabet, parikh, first, last));
  };
  for (int a = 0; a <= cap; ++a)
    for (int b = 0; a + b <= cap; ++b)
      for (int c = 0; a + b + c <= cap; ++c) {
        if (a + b + c >= 1) check_all_ends(3, {a, b, c});
        for (int d = 0; a + b + c + d <= cap; ++d)
          if (a + b + c + d >= 1) check_all_ends(4, {a, b, c, d});
      }
}

TEST_CASE("Smirnov end-pair totals add up to the unconstrained count") {
  const std::vector<int> parikh{2, 2, 1};
  // unconstrained Smirnov count by brute force
  BigUint total;
  for (int first = 0; first < 3; ++first)
    for (int last = 0; last < 3; ++last)
      total += smirnov_bruteforce(3, parikh, first, last);
  BigUint dp_total;
  for (int first = 0; first < 3; ++first)
    for (int last = 0; last < 3; ++last) dp_total += smirnov_count(3, parikh, first, last);
  CHECK(total == dp_total);
}

TEST_CASE("brute force refuses oversized Parikh sums") {
  CHECK_THROWS_AS(smirnov_bruteforce(3, {5, 5, 5}, 0, 0), std::invalid_argument);
}
