#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace streett {

// Unsigned big integer, base 2^32 limbs. Just enough arithmetic for the
// bound formulas: factorials and powers overflow 64 bits already at n = 4.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  static BigUint factorial(unsigned n);
  static BigUint pow(std::uint64_t base, unsigned exp); // pow(0,0) = 1
  static BigUint pow(const BigUint& base, unsigned exp);
  static BigUint binomial(unsigned a, unsigned b); // C(a,b), 0 when b > a

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator*=(const BigUint& rhs);
  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
  friend BigUint operator*(BigUint lhs, const BigUint& rhs) { return lhs *= rhs; }

  bool operator==(const BigUint& rhs) const = default;
  std::strong_ordering operator<=>(const BigUint& rhs) const;

  bool is_zero() const { return limbs_.empty(); }
  // observed counts fit machine words; bounds may not
  bool at_least(std::uint64_t v) const { return *this >= BigUint(v); }

  std::string to_string() const;

private:
  void trim();
  std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros
};

} // namespace streett
