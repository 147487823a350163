#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "niho/field.hpp"

namespace niho::detail {

using u128 = unsigned __int128;

// Carry-less 64x64 -> 128 product.
inline u128 clmul(std::uint64_t a, std::uint64_t b) {
  u128 r = 0;
  const u128 wide = a;
  while (b) {
    r ^= wide << __builtin_ctzll(b);
    b &= b - 1;
  }
  return r;
}

// Arithmetic in GF(p)[x]/(m) on packed values. Valid as a ring even when m
// is reducible, which the modulus search relies on.
class PolyBasis {
 public:
  PolyBasis(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t order() const { return order_; }

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value pow(Value a, std::uint64_t e) const;
  // Reduced image of the indeterminate x.
  Value x() const;

  std::vector<std::uint32_t> digits(Value a) const;
  Value encode(const std::uint32_t* digits, std::size_t count) const;

 private:
  Value reduce2(u128 r) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t modulus_bits_ = 0;
  std::vector<std::uint64_t> place_;  // p^i
};

struct Tables {
  std::vector<std::uint32_t> exp;  // 2(q-1) entries
  std::vector<std::uint32_t> log;  // q entries, log[0] unused
};

// Dense polynomial helpers over GF(p), constant term first, used only for
// modulus validation.
std::vector<std::uint32_t> prime_poly_trim(std::vector<std::uint32_t> a);
std::vector<std::uint32_t> prime_poly_mod(std::vector<std::uint32_t> a,
                                          const std::vector<std::uint32_t>& m,
                                          std::uint32_t p);
std::vector<std::uint32_t> prime_poly_gcd(std::vector<std::uint32_t> a,
                                          std::vector<std::uint32_t> b, std::uint32_t p);

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p);

}  // namespace niho::detail
