#pragma once

#include "symcyc/hypercube.hpp"
#include "symcyc/rng.hpp"
#include "symcyc/types.hpp"

#include <optional>
#include <vector>

namespace symcyc {

// A symmetric 2t-cycle in the hypercube graph on {1,-1}^t: consecutive
// vertices differ in one coordinate and D^{k+t} = -D^k. The first t vertices
// form a basis of R^t. Immutable after construction.
class SymmetricCycle {
 public:
  // The distinguished cycle R: R^0 = T^(+), R^s negates the prefix [1..s].
  static SymmetricCycle distinguished(int t);

  // Builds the cycle through `start` that flips coordinate flip_order[k-1] at
  // step k (flip_order extended periodically to the second half).
  static SymmetricCycle from_flips(const SignVec& start, const std::vector<int>& flip_order);

  int ground_size() const { return t_; }
  int vertex_count() const { return 2 * t_; }

  const IntMat& vertex_matrix() const { return verts_; }  // 2t x t, row k = D^k
  SignVec vertex(int k) const { return verts_.row(k); }   // 0 <= k < 2t
  SignVec vertex_mod(int k) const;                        // any integer index

  IntMat basis_matrix() const { return verts_.topRows(t_); }  // M(D)

  const std::vector<int>& flip_order() const { return flips_; }
  bool is_distinguished() const;

  std::optional<int> index_of(const SignVec& v) const;
  bool contains_vertex(const SignVec& v) const { return index_of(v).has_value(); }

  friend bool operator==(const SymmetricCycle& a, const SymmetricCycle& b) {
    return a.t_ == b.t_ && a.verts_ == b.verts_;
  }

 private:
  SymmetricCycle(int t, IntMat verts, std::vector<int> flips);
  void validate() const;

  int t_;
  IntMat verts_;
  std::vector<int> flips_;
};

SymmetricCycle random_cycle(int t, SplitMix64& rng);

// The decomposition of a vertex T over a symmetric cycle: the unique
// x in {-1,0,1}^t with x * M(D) = T, and the corresponding inclusion-minimal
// odd vertex set Q(T,D) stored as indices into (D^0,...,D^{2t-1}):
// index i if x_{i+1} = +1, index i+t if x_{i+1} = -1.
struct Decomposition {
  SignVec owner;
  SymmetricCycle cycle;
  XVec x;
  std::vector<int> q_indices;

  int q() const { return static_cast<int>(q_indices.size()); }
  std::vector<SignVec> q_vertices() const;
};

// General decomposition by exact rational elimination.
Decomposition decompose(const SignVec& v, const SymmetricCycle& cycle);

// The computation-free coordinate formula for the distinguished cycle:
// x_1 = (T(1)+T(t))/2, x_e = (T(e)-T(e-1))/2 for e >= 2.
XVec x_distinguished(const SignVec& v);
Decomposition decompose_distinguished(const SignVec& v);

// |Q(_{-A}T^(+), R)|; support size of the coordinate formula, in bit form.
int q_of_mask(Mask mask, int t);
int q_of_set(const GroundSubset& a);

// x(T, D2) from x(T, D1) as x1 * M(D1) * M(D2)^{-1}, computed exactly.
XVec change_of_basis(const XVec& x1, const SymmetricCycle& d1, const SymmetricCycle& d2);

// Sum of the cyclically shifted decomposition vertices; always a vertex again.
SignVec circular_translate(const Decomposition& dec, int shift);

}  // namespace symcyc
