#include "symcyc/exact_solve.hpp"

#include <stdexcept>

namespace symcyc {

std::int64_t exact_determinant(Mat64 m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Intermediate products need 128 bits; the quotient is again a minor.
        __int128 num = static_cast<__int128>(m(i, j)) * m(k, k) -
                       static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = static_cast<std::int64_t>(num / prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RowVec<std::int64_t> solve_row_system(const IntMat& m, const RowVec<int>& rhs) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n != rhs.size())
    throw std::invalid_argument("solve_row_system: shape mismatch");

  // x * M = rhs is M^T y = rhs^T with y = x^T; Cramer with Bareiss determinants.
  Mat64 base = m.transpose().cast<std::int64_t>();
  const std::int64_t det = exact_determinant(base);
  if (det == 0) throw std::invalid_argument("solve_row_system: singular matrix");

  RowVec<std::int64_t> x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Mat64 sub = base;
    for (Eigen::Index r = 0; r < n; ++r) sub(r, i) = rhs[r];
    const std::int64_t num = exact_determinant(std::move(sub));
    if (num % det != 0) throw std::domain_error("solve_row_system: non-integer solution");
    x[i] = num / det;
  }
  return x;
}

}  // namespace symcyc
