#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "niho/field.hpp"

namespace niho {

// Dense univariate polynomial over a field, constant term first, with no
// trailing zero coefficients. The zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Value> coeffs);

  static Poly constant(FieldPtr field, Value c);
  static Poly monomial(FieldPtr field, std::size_t k, Value c = 1);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1); }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Value coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Value leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Value> coeffs() const { return coeffs_; }

  Value eval(Value x) const;
  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Value c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Value> coeffs_;
};

// Throws FieldError unless a and b live over the same field.
void require_same_field(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
// base^exponent mod modulus by square-and-multiply.
Poly poly_powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);
// base^{p^k} mod modulus by k successive p-th powers; exponents never overflow.
Poly poly_frobenius_mod(const Poly& base, std::uint64_t k, const Poly& modulus);
// x^{q^k} - x reduced mod f, q = |field of f|.
Poly frobenius_x_minus_x(const Poly& f, std::uint64_t k);
bool is_squarefree(const Poly& f);

// Coefficient-wise image of f in a field built over f's field.
Poly embed_poly(const Poly& f, const FieldPtr& dst);

}  // namespace niho
