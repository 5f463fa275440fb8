#pragma once

#include "symcyc/types.hpp"

#include <cstdint>

namespace symcyc {

// Exact integer linear algebra on the small {1,-1} matrices of this library.
// Bareiss fraction-free elimination keeps every intermediate value an exact
// minor of the input, so for t <= kMaxGround everything fits in 64 bits with
// wide headroom (Hadamard bound). No floating point, no tolerances.

using Mat64 = DenseMat<std::int64_t>;

// Destructive Bareiss determinant.
std::int64_t exact_determinant(Mat64 m);

inline std::int64_t exact_determinant(const IntMat& m) {
  return exact_determinant(m.cast<std::int64_t>().eval());
}

// Solves the row system x * M = rhs over the rationals by exact elimination and
// returns the (necessarily integral) solution. Throws std::invalid_argument if
// M is singular and std::domain_error if the solution is not integral.
RowVec<std::int64_t> solve_row_system(const IntMat& m, const RowVec<int>& rhs);

}  // namespace symcyc
