#pragma once

#include "symcyc/types.hpp"

#include <string_view>
#include <vector>

namespace symcyc {

struct Interval {
  int lo = 0;
  int hi = 0;  // inclusive
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A subset of the ground set E_t = [1..t], held as a characteristic bitmask so
// exhaustive sweeps can iterate subsets in increasing mask order. The member
// list and the interval decomposition are derived views.
class GroundSubset {
 public:
  explicit GroundSubset(int t) : t_((require_ground_size(t), t)), mask_(0) {}
  GroundSubset(int t, Mask mask);
  static GroundSubset of(int t, std::initializer_list<int> members);
  static GroundSubset from_members(int t, const std::vector<int>& members);

  int ground_size() const { return t_; }
  Mask mask() const { return mask_; }
  int size() const { return __builtin_popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int e) const { return e >= 1 && e <= t_ && (mask_ >> (e - 1)) & 1u; }

  std::vector<int> members() const;

  // Maximal runs of consecutive members; consecutive intervals satisfy
  // j_p + 2 <= i_{p+1}. The empty set decomposes into no intervals (rho = 0).
  std::vector<Interval> intervals() const;
  int interval_count() const;  // rho

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;

 private:
  int t_;
  Mask mask_;
};

GroundSubset set_union(const GroundSubset& a, const GroundSubset& b);
GroundSubset set_intersection(const GroundSubset& a, const GroundSubset& b);
GroundSubset set_difference(const GroundSubset& a, const GroundSubset& b);
GroundSubset sym_difference(const GroundSubset& a, const GroundSubset& b);
GroundSubset complement(const GroundSubset& a);
GroundSubset reversed(const GroundSubset& a);  // e -> t+1-e

int interval_count_of_mask(Mask mask, int t);

// ---- vertices of the discrete hypercubes {1,-1}^t and {0,1}^t ----

SignVec all_ones(int t);  // T^(+)

// _{-A}T^(+): the vertex whose negative part is A.
SignVec negate_at(const GroundSubset& a);

GroundSubset negative_part(const SignVec& v);

int distance(const SignVec& a, const SignVec& b);        // Hamming
int scalar_product(const SignVec& a, const SignVec& b);  // = t - 2*distance

BinaryVec to_binary(const SignVec& v);  // T -> (T^(+) - T)/2
SignVec to_sign(const BinaryVec& v);    // B -> T^(+) - 2B

int hamming_weight(const BinaryVec& v);

// Johnson-scheme dissimilarity of equal-size sets: s - |A n B| = |A delta B|/2.
int dissimilarity(const GroundSubset& a, const GroundSubset& b);

// Mask of the negative part of the vertex encoded by `mask` (identity); sweeps
// identify a vertex with the mask of its negative part.
inline SignVec sign_vec_from_mask(Mask mask, int t) {
  SignVec v(t);
  for (int e = 0; e < t; ++e) v[e] = (mask >> e) & 1u ? -1 : 1;
  return v;
}

// Parses a vertex spec like "+-+": '+' is +1, '-' is -1, coordinates 1..t left
// to right.
SignVec parse_sign_vector(std::string_view spec);

std::string format_sign_vector(const SignVec& v);

}  // namespace symcyc
