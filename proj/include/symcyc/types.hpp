#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>

namespace symcyc {

template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <class Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Entries are tiny (signs, bits, {-1,0,1}); plain int keeps Eigen expressions exact.
using SignVec = RowVec<int>;    // vertex of {1,-1}^t
using BinaryVec = RowVec<int>;  // vertex of {0,1}^t
using XVec = RowVec<int>;       // decomposition coordinates, entries in {-1,0,1}
using IntMat = DenseMat<int>;

// Characteristic bitmask of a subset of E_t = [1..t]; bit e-1 represents element e.
using Mask = std::uint32_t;

inline constexpr int kMinGround = 3;   // standing assumption t >= 3
inline constexpr int kMaxGround = 24;  // bitmask sweeps use 32-bit masks; keep headroom

inline void require_ground_size(int t) {
  if (t < kMinGround || t > kMaxGround)
    throw std::invalid_argument("ground size t must be in [3, 24]");
}

inline bool is_sign_vector(const SignVec& v) {
  for (int e = 0; e < v.size(); ++e)
    if (v[e] != 1 && v[e] != -1) return false;
  return v.size() >= kMinGround;
}

inline bool is_binary_vector(const BinaryVec& v) {
  for (int e = 0; e < v.size(); ++e)
    if (v[e] != 0 && v[e] != 1) return false;
  return v.size() >= kMinGround;
}

inline void require_sign_vector(const SignVec& v) {
  if (!is_sign_vector(v)) throw std::invalid_argument("not a {1,-1} vector of length >= 3");
}

inline void require_binary_vector(const BinaryVec& v) {
  if (!is_binary_vector(v)) throw std::invalid_argument("not a {0,1} vector of length >= 3");
}

inline void require_same_length(const SignVec& a, const SignVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace symcyc
