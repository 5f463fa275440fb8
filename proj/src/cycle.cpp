#include "symcyc/cycle.hpp"

#include "symcyc/exact_solve.hpp"

#include <stdexcept>

namespace symcyc {

SymmetricCycle::SymmetricCycle(int t, IntMat verts, std::vector<int> flips)
    : t_(t), verts_(std::move(verts)), flips_(std::move(flips)) {
  validate();
}

void SymmetricCycle::validate() const {
  for (int k = 0; k < 2 * t_; ++k) {
    SignVec row = verts_.row(k);
    require_sign_vector(row);
  }
  for (int k = 0; k < t_; ++k) {
    if (verts_.row(k + t_) != -verts_.row(k))
      throw std::invalid_argument("cycle violates the antipodal law D^{k+t} = -D^k");
  }
  for (int k = 0; k < 2 * t_; ++k) {
    if (distance(verts_.row(k), verts_.row((k + 1) % (2 * t_))) != 1)
      throw std::invalid_argument("consecutive cycle vertices must differ in one coordinate");
  }
  for (int a = 0; a < 2 * t_; ++a)
    for (int b = a + 1; b < 2 * t_; ++b)
      if (verts_.row(a) == verts_.row(b))
        throw std::invalid_argument("cycle vertices must be pairwise distinct");
  if (exact_determinant(basis_matrix()) == 0)
    throw std::invalid_argument("cycle vertices D^0..D^{t-1} must form a basis");
}

SymmetricCycle SymmetricCycle::from_flips(const SignVec& start,
                                          const std::vector<int>& flip_order) {
  require_sign_vector(start);
  const int t = static_cast<int>(start.size());
  if (static_cast<int>(flip_order.size()) != t)
    throw std::invalid_argument("flip order must have t entries");
  std::vector<bool> seen(t + 1, false);
  for (int c : flip_order) {
    if (c < 1 || c > t || seen[c])
      throw std::invalid_argument("flip order must be a permutation of [1..t]");
    seen[c] = true;
  }
  IntMat verts(2 * t, t);
  verts.row(0) = start;
  for (int k = 1; k < 2 * t; ++k) {
    verts.row(k) = verts.row(k - 1);
    const int coord = flip_order[(k - 1) % t] - 1;
    verts(k, coord) = -verts(k, coord);
  }
  return SymmetricCycle(t, std::move(verts), flip_order);
}

SymmetricCycle SymmetricCycle::distinguished(int t) {
  require_ground_size(t);
  std::vector<int> identity(t);
  for (int i = 0; i < t; ++i) identity[i] = i + 1;
  return from_flips(all_ones(t), identity);
}

bool SymmetricCycle::is_distinguished() const {
  if (verts_.row(0) != SignVec::Ones(t_)) return false;
  for (int i = 0; i < t_; ++i)
    if (flips_[i] != i + 1) return false;
  return true;
}

SignVec SymmetricCycle::vertex_mod(int k) const {
  const int n = 2 * t_;
  int r = k % n;
  if (r < 0) r += n;
  return verts_.row(r);
}

std::optional<int> SymmetricCycle::index_of(const SignVec& v) const {
  if (v.size() != t_) return std::nullopt;
  for (int k = 0; k < 2 * t_; ++k)
    if (verts_.row(k) == v) return k;
  return std::nullopt;
}

SymmetricCycle random_cycle(int t, SplitMix64& rng) {
  require_ground_size(t);
  SignVec start(t);
  for (int e = 0; e < t; ++e) start[e] = rng.coin() ? 1 : -1;
  return SymmetricCycle::from_flips(start, random_permutation(t, rng));
}

std::vector<SignVec> Decomposition::q_vertices() const {
  std::vector<SignVec> out;
  out.reserve(q_indices.size());
  for (int i : q_indices) out.push_back(cycle.vertex(i));
  return out;
}

static std::vector<int> q_indices_from_x(const XVec& x, int t) {
  std::vector<int> idx;
  for (int i = 0; i < t; ++i) {
    if (x[i] == 1)
      idx.push_back(i);
    else if (x[i] == -1)
      idx.push_back(i + t);  // -D^i = D^{i+t}
  }
  return idx;
}

static void require_x_range(const XVec& x) {
  int support = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] < -1 || x[i] > 1) throw std::domain_error("x-vector entry outside {-1,0,1}");
    support += x[i] != 0;
  }
  if (support % 2 == 0) throw std::domain_error("x-vector support must be odd");
}

Decomposition decompose(const SignVec& v, const SymmetricCycle& cycle) {
  require_sign_vector(v);
  const int t = cycle.ground_size();
  if (v.size() != t) throw std::invalid_argument("vertex length does not match the cycle");

  const IntMat m = cycle.basis_matrix();
  const RowVec<std::int64_t> sol = solve_row_system(m, v);
  XVec x = sol.cast<int>();
  require_x_range(x);
  if ((x * m).eval() != v) throw std::domain_error("decomposition failed to reproduce vertex");
  return Decomposition{v, cycle, x, q_indices_from_x(x, t)};
}

XVec x_distinguished(const SignVec& v) {
  require_sign_vector(v);
  const int t = static_cast<int>(v.size());
  XVec x(t);
  x[0] = (v[0] + v[t - 1]) / 2;
  for (int e = 1; e < t; ++e) x[e] = (v[e] - v[e - 1]) / 2;
  return x;
}

Decomposition decompose_distinguished(const SignVec& v) {
  XVec x = x_distinguished(v);
  require_x_range(x);
  const int t = static_cast<int>(v.size());
  return Decomposition{v, SymmetricCycle::distinguished(t), x, q_indices_from_x(x, t)};
}

int q_of_mask(Mask mask, int t) {
  // Support of the coordinate formula: x_1 != 0 iff T(1) = T(t), and for
  // e >= 2, x_e != 0 iff T(e) != T(e-1). Bits of `mask` are the negative part.
  const bool first = (mask & 1u) != 0;
  const bool last = ((mask >> (t - 1)) & 1u) != 0;
  int q = (first == last) ? 1 : 0;
  const Mask transitions = (mask ^ (mask >> 1)) & ((Mask{1} << (t - 1)) - 1);
  return q + __builtin_popcount(transitions);
}

int q_of_set(const GroundSubset& a) { return q_of_mask(a.mask(), a.ground_size()); }

XVec change_of_basis(const XVec& x1, const SymmetricCycle& d1, const SymmetricCycle& d2) {
  if (d1.ground_size() != d2.ground_size())
    throw std::invalid_argument("change_of_basis requires cycles over the same ground set");
  if (x1.size() != d1.ground_size())
    throw std::invalid_argument("x-vector length does not match the cycles");
  require_x_range(x1);

  const SignVec tope = (x1 * d1.basis_matrix()).eval();
  const RowVec<std::int64_t> sol = solve_row_system(d2.basis_matrix(), tope);
  XVec x2 = sol.cast<int>();
  require_x_range(x2);
  return x2;
}

SignVec circular_translate(const Decomposition& dec, int shift) {
  const int t = dec.cycle.ground_size();
  SignVec sum = SignVec::Zero(t);
  for (int i : dec.q_indices) sum += dec.cycle.vertex_mod(i + shift);
  require_sign_vector(sum);  // the paper's remark: every entry must be +-1
  return sum;
}

}  // namespace symcyc
