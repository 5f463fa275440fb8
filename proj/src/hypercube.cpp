#include "symcyc/hypercube.hpp"

#include <stdexcept>
#include <string>

namespace symcyc {

GroundSubset::GroundSubset(int t, Mask mask) : t_(t), mask_(mask) {
  require_ground_size(t);
  if (t < 32 && (mask >> t) != 0)
    throw std::invalid_argument("subset mask has members outside [1..t]");
}

GroundSubset GroundSubset::of(int t, std::initializer_list<int> members) {
  return from_members(t, std::vector<int>(members));
}

GroundSubset GroundSubset::from_members(int t, const std::vector<int>& members) {
  require_ground_size(t);
  Mask mask = 0;
  for (int e : members) {
    if (e < 1 || e > t) throw std::invalid_argument("subset member outside [1..t]");
    mask |= Mask{1} << (e - 1);
  }
  return GroundSubset(t, mask);
}

std::vector<int> GroundSubset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e = 1; e <= t_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

std::vector<Interval> GroundSubset::intervals() const {
  std::vector<Interval> out;
  int e = 1;
  while (e <= t_) {
    if (!contains(e)) {
      ++e;
      continue;
    }
    int lo = e;
    while (e + 1 <= t_ && contains(e + 1)) ++e;
    out.push_back({lo, e});
    ++e;
  }
  return out;
}

int interval_count_of_mask(Mask mask, int t) {
  if (t < 32) mask &= (Mask{1} << t) - 1;
  // run starts: bit set whose lower neighbour is clear
  return __builtin_popcount(mask & ~(mask << 1));
}

int GroundSubset::interval_count() const { return interval_count_of_mask(mask_, t_); }

static void require_same_ground(const GroundSubset& a, const GroundSubset& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("subsets live on different ground sets");
}

GroundSubset set_union(const GroundSubset& a, const GroundSubset& b) {
  require_same_ground(a, b);
  return GroundSubset(a.ground_size(), a.mask() | b.mask());
}

GroundSubset set_intersection(const GroundSubset& a, const GroundSubset& b) {
  require_same_ground(a, b);
  return GroundSubset(a.ground_size(), a.mask() & b.mask());
}

GroundSubset set_difference(const GroundSubset& a, const GroundSubset& b) {
  require_same_ground(a, b);
  return GroundSubset(a.ground_size(), a.mask() & ~b.mask());
}

GroundSubset sym_difference(const GroundSubset& a, const GroundSubset& b) {
  require_same_ground(a, b);
  return GroundSubset(a.ground_size(), a.mask() ^ b.mask());
}

GroundSubset complement(const GroundSubset& a) {
  const Mask full = (Mask{1} << a.ground_size()) - 1;
  return GroundSubset(a.ground_size(), full & ~a.mask());
}

GroundSubset reversed(const GroundSubset& a) {
  const int t = a.ground_size();
  Mask out = 0;
  for (int e = 1; e <= t; ++e)
    if (a.contains(e)) out |= Mask{1} << (t - e);
  return GroundSubset(t, out);
}

SignVec all_ones(int t) {
  require_ground_size(t);
  return SignVec::Ones(t);
}

SignVec negate_at(const GroundSubset& a) {
  return sign_vec_from_mask(a.mask(), a.ground_size());
}

GroundSubset negative_part(const SignVec& v) {
  require_sign_vector(v);
  Mask mask = 0;
  for (int e = 0; e < v.size(); ++e)
    if (v[e] == -1) mask |= Mask{1} << e;
  return GroundSubset(static_cast<int>(v.size()), mask);
}

int distance(const SignVec& a, const SignVec& b) {
  require_same_length(a, b);
  int d = 0;
  for (int e = 0; e < a.size(); ++e) d += a[e] != b[e];
  return d;
}

int scalar_product(const SignVec& a, const SignVec& b) {
  require_same_length(a, b);
  return a.dot(b);
}

BinaryVec to_binary(const SignVec& v) {
  require_sign_vector(v);
  return (SignVec::Ones(v.size()) - v) / 2;
}

SignVec to_sign(const BinaryVec& v) {
  require_binary_vector(v);
  return SignVec::Ones(v.size()) - 2 * v;
}

int hamming_weight(const BinaryVec& v) {
  require_binary_vector(v);
  return v.sum();
}

int dissimilarity(const GroundSubset& a, const GroundSubset& b) {
  require_same_ground(a, b);
  if (a.size() != b.size())
    throw std::invalid_argument("dissimilarity requires equal-size subsets");
  return a.size() - set_intersection(a, b).size();
}

SignVec parse_sign_vector(std::string_view spec) {
  SignVec v(static_cast<int>(spec.size()));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == '+')
      v[static_cast<int>(i)] = 1;
    else if (spec[i] == '-')
      v[static_cast<int>(i)] = -1;
    else
      throw std::invalid_argument("vertex spec must consist of '+' and '-' only");
  }
  require_sign_vector(v);
  return v;
}

std::string format_sign_vector(const SignVec& v) {
  std::string s;
  s.reserve(v.size());
  for (int e = 0; e < v.size(); ++e) s.push_back(v[e] == 1 ? '+' : '-');
  return s;
}

}  // namespace symcyc
