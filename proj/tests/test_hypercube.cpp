#include "symcyc/hypercube.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace symcyc;

namespace {

SignVec sv(std::initializer_list<int> entries) {
  SignVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (int e : entries) v[i++] = e;
  return v;
}

}  // namespace

TEST_CASE("negate_at builds the vertex with the given negative part") {
  CHECK(negate_at(GroundSubset(3)) == sv({1, 1, 1}));
  CHECK(negate_at(GroundSubset::of(3, {1, 3})) == sv({-1, 1, -1}));
  CHECK(negate_at(GroundSubset::of(4, {1, 2})) == sv({-1, -1, 1, 1}));
  CHECK_THROWS_AS(GroundSubset::of(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSubset::of(3, {0}), std::invalid_argument);
}

TEST_CASE("negative_part inverts negate_at") {
  CHECK(negative_part(sv({1, 1, 1})) == GroundSubset(3));
  CHECK(negative_part(sv({-1, 1, -1})) == GroundSubset::of(3, {1, 3}));
  CHECK(negative_part(sv({-1, -1, -1})) == GroundSubset::of(3, {1, 2, 3}));
  for (int t = 3; t <= 8; ++t)
    for (Mask m = 0; m < (Mask{1} << t); ++m) {
      const GroundSubset a(t, m);
      CHECK(negative_part(negate_at(a)) == a);
    }
}

TEST_CASE("distance and scalar product") {
  CHECK(distance(sv({1, 1, 1}), sv({1, 1, 1})) == 0);
  CHECK(distance(sv({1, 1, 1}), sv({-1, -1, -1})) == 3);
  CHECK(distance(sv({1, -1, 1}), sv({1, 1, -1})) == 2);
  CHECK(scalar_product(sv({1, 1, 1}), sv({1, 1, 1})) == 3);
  CHECK(scalar_product(sv({1, 1, 1, 1}), sv({1, 1, -1, -1})) == 0);
  CHECK(scalar_product(sv({1, -1, 1}), sv({1, 1, -1})) == -1);
  CHECK_THROWS_AS(distance(sv({1, 1, 1}), sv({1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(scalar_product(sv({1, 1, 1}), sv({1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("scalar product equals t - 2*distance on every pair") {
  const int t = 5;
  for (Mask a = 0; a < (Mask{1} << t); ++a)
    for (Mask b = 0; b < (Mask{1} << t); ++b) {
      const SignVec x = sign_vec_from_mask(a, t), y = sign_vec_from_mask(b, t);
      CHECK(scalar_product(x, y) == t - 2 * distance(x, y));
    }
}

TEST_CASE("interval decomposition") {
  const GroundSubset a = GroundSubset::of(5, {1, 2, 4});
  CHECK(a.intervals() == std::vector<Interval>{{1, 2}, {4, 4}});
  CHECK(a.interval_count() == 2);
  const GroundSubset b = GroundSubset::of(3, {2});
  CHECK(b.intervals() == std::vector<Interval>{{2, 2}});
  CHECK(b.interval_count() == 1);
  CHECK(GroundSubset(4).intervals().empty());
  CHECK(GroundSubset(4).interval_count() == 0);
}

TEST_CASE("interval decomposition covers the set with gaps of at least two") {
  for (int t = 3; t <= 10; ++t)
    for (Mask m = 0; m < (Mask{1} << t); ++m) {
      const GroundSubset a(t, m);
      const auto intervals = a.intervals();
      Mask rebuilt = 0;
      int prev_hi = -10;
      for (const Interval& iv : intervals) {
        CHECK(prev_hi + 2 <= iv.lo);
        for (int e = iv.lo; e <= iv.hi; ++e) rebuilt |= Mask{1} << (e - 1);
        prev_hi = iv.hi;
      }
      CHECK(rebuilt == m);
      CHECK(static_cast<int>(intervals.size()) == a.interval_count());
    }
}

TEST_CASE("binary conversions") {
  CHECK(to_binary(sv({1, 1, 1})) == sv({0, 0, 0}));
  CHECK(to_binary(sv({-1, 1, -1})) == sv({1, 0, 1}));
  CHECK(to_sign(sv({1, 1, 0})) == sv({-1, -1, 1}));
  for (int t = 3; t <= 10; ++t)
    for (Mask m = 0; m < (Mask{1} << t); ++m) {
      const SignVec v = sign_vec_from_mask(m, t);
      CHECK(to_sign(to_binary(v)) == v);
      const BinaryVec b = to_binary(v);
      CHECK(to_binary(to_sign(b)) == b);
    }
}

TEST_CASE("hamming weight") {
  CHECK(hamming_weight(sv({0, 0, 0})) == 0);
  CHECK(hamming_weight(sv({1, 0, 1})) == 2);
  CHECK(hamming_weight(sv({1, 1, 1, 1})) == 4);
}

TEST_CASE("dissimilarity of equal-size sets") {
  CHECK(dissimilarity(GroundSubset::of(3, {1}), GroundSubset::of(3, {1})) == 0);
  CHECK(dissimilarity(GroundSubset::of(3, {1}), GroundSubset::of(3, {2})) == 1);
  CHECK(dissimilarity(GroundSubset::of(4, {1, 2}), GroundSubset::of(4, {2, 3})) == 1);
  CHECK_THROWS_AS(dissimilarity(GroundSubset::of(3, {1}), GroundSubset::of(3, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("dissimilarity agrees with the scalar-product form") {
  for (int t = 3; t <= 8; ++t)
    for (Mask a = 0; a < (Mask{1} << t); ++a)
      for (Mask b = 0; b < (Mask{1} << t); ++b) {
        if (__builtin_popcount(a) != __builtin_popcount(b)) continue;
        const GroundSubset sa(t, a), sb(t, b);
        const int lhs = 4 * dissimilarity(sa, sb);
        CHECK(lhs == t - scalar_product(negate_at(sa), negate_at(sb)));
        CHECK(2 * dissimilarity(sa, sb) == distance(negate_at(sa), negate_at(sb)));
        CHECK(2 * dissimilarity(sa, sb) == sym_difference(sa, sb).size());
      }
}

TEST_CASE("set algebra and reversal") {
  const GroundSubset a = GroundSubset::of(5, {1, 2, 4});
  CHECK(reversed(a) == GroundSubset::of(5, {2, 4, 5}));
  CHECK(complement(a) == GroundSubset::of(5, {3, 5}));
  const GroundSubset b = GroundSubset::of(5, {2, 3});
  CHECK(set_union(a, b) == GroundSubset::of(5, {1, 2, 3, 4}));
  CHECK(set_intersection(a, b) == GroundSubset::of(5, {2}));
  CHECK(set_difference(a, b) == GroundSubset::of(5, {1, 4}));
  CHECK(sym_difference(a, b) == GroundSubset::of(5, {1, 3, 4}));
}

TEST_CASE("sign vector parsing and formatting") {
  CHECK(parse_sign_vector("-+-") == sv({-1, 1, -1}));
  CHECK(format_sign_vector(sv({-1, 1, -1})) == "-+-");
  CHECK_THROWS_AS(parse_sign_vector("+0-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_vector("+-"), std::invalid_argument);  // t >= 3
}
