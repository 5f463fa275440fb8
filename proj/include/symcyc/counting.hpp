#pragma once

#include "symcyc/bigint.hpp"

#include <vector>

namespace symcyc {

using CountValue = BigUint;

// Standard binomial; 0 whenever the arguments are out of range (k < 0, n < 0,
// k > n). Small arguments hit a 64-bit table, larger ones Pascal rows.
CountValue binomial(long long n, long long k);

// c(m;n): compositions of n into m positive parts, binom(n-1, m-1).
CountValue compositions(long long parts, long long total);

// Kaplansky: ways to pick k pairwise non-consecutive objects from a row of n.
CountValue kaplansky(long long n, long long k);

// Fibonacci with F_1 = F_2 = 1 (and F_0 = 0).
CountValue fibonacci(long long n);

// Number of Smirnov words (no two equal adjacent letters) over an alphabet of
// `alphabet` letters with the given Parikh vector, starting with letter
// `first` and ending with letter `last` (letters are 0-based indices).
// Letter-order convention everywhere in this library: the ternary alphabet
// (theta, alpha, beta) is (0, 1, 2) and the quaternary alphabet
// (theta, alpha, beta, gamma) is (0, 1, 2, 3).
CountValue smirnov_count(int alphabet, const std::vector<int>& parikh, int first, int last);

// Independent oracle: generates every multiset permutation and filters.
// Refuses Parikh sums above 12.
CountValue smirnov_bruteforce(int alphabet, const std::vector<int>& parikh, int first, int last);

}  // namespace symcyc
