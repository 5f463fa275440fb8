#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace symcyc {

// Arbitrary-precision unsigned integer, just big enough for exact counting:
// addition, multiplication, comparison and decimal output. Counts are never
// truncated or rounded; there is no floating point anywhere in the library.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit by design, counts start as machine ints

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t as_u64() const;  // throws std::overflow_error if the value does not fit

  std::string str() const;

  BigUint& operator+=(const BigUint& rhs);
  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);
  BigUint& operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  friend std::ostream& operator<<(std::ostream& os, const BigUint& v);

 private:
  // Little-endian base-2^32 limbs, canonical form: no trailing zero limbs (zero = empty).
  std::vector<std::uint32_t> limbs_;
  void trim();
};

}  // namespace symcyc
