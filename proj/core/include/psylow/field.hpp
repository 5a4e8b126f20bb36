#pragma once

#include <cstdint>
#include <vector>

namespace psylow {

// Dense arithmetic tables for GF(q), q = p^k <= kMaxFieldSize. Elements are
// encoded as integers 0..q-1 whose base-p digits are the coefficients of the
// residue polynomial (digit i = coefficient of x^i); 0 and 1 are the field's
// zero and one under this encoding.
struct FieldTable {
  unsigned q = 0;
  unsigned p = 0;
  unsigned k = 0;
  std::vector<std::uint16_t> add;  // q*q, row-major
  std::vector<std::uint16_t> mul;  // q*q, row-major
  std::uint16_t primitive = 0;     // smallest generator of the unit group
  // monic modulus for k >= 2, coefficients low degree first, length k+1;
  // empty for prime fields
  std::vector<std::uint16_t> modulus;

  std::uint16_t add_of(unsigned a, unsigned b) const { return add[a * q + b]; }
  std::uint16_t mul_of(unsigned a, unsigned b) const { return mul[a * q + b]; }
  std::uint16_t neg_of(unsigned a) const;
  std::uint16_t inv_of(unsigned a) const;  // a != 0
  std::uint16_t pow_of(unsigned a, std::uint64_t e) const;
  std::uint64_t unit_order(unsigned a) const;  // a != 0
};

// q must be a prime power <= kMaxFieldSize. For k >= 2 the modulus is the
// lexicographically smallest monic irreducible of degree k, coefficient
// vectors compared low degree first.
FieldTable make_field(unsigned q);

}  // namespace psylow
