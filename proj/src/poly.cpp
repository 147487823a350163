#include "niho/poly.hpp"

#include <algorithm>

namespace niho {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Value> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_->contains(c)) throw FieldError("coefficient out of range for " + field_->descriptor());
  }
  trim();
}

Poly Poly::constant(FieldPtr field, Value c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t k, Value c) {
  std::vector<Value> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Value Poly::eval(Value x) const {
  Value acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Value c) const {
  std::vector<Value> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Value> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  return Poly(field_, std::move(out));
}

void require_same_field(const Poly& a, const Poly& b) {
  if (a.field().id() != b.field().id()) {
    throw FieldError("polynomials over different fields (" + a.field().descriptor() + " vs " +
                     b.field().descriptor() + ")");
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& f = a.field();
  std::vector<Value> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  const auto& f = a.field();
  std::vector<Value> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.field_ptr()), a};
  std::vector<Value> quo(a.degree() - db + 1, 0);
  const Value lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const Value c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
  }
  rem.resize(db);
  return {Poly(a.field_ptr(), std::move(quo)), Poly(a.field_ptr(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool operator==(const Poly& a, const Poly& b) {
  return a.field_->id() == b.field_->id() && a.coeffs_ == b.coeffs_;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly poly_powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  require_same_field(base, modulus);
  if (modulus.degree() < 1) throw FieldError("powmod needs a nonconstant modulus");
  Poly result = Poly::constant(base.field_ptr(), 1);
  Poly b = base % modulus;
  while (exponent) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent) b = (b * b) % modulus;
  }
  return result;
}

Poly poly_frobenius_mod(const Poly& base, std::uint64_t k, const Poly& modulus) {
  if (modulus.degree() < 1) throw FieldError("powmod needs a nonconstant modulus");
  const std::uint32_t p = base.field().characteristic();
  Poly y = base % modulus;
  for (std::uint64_t i = 0; i < k; ++i) y = poly_powmod(y, p, modulus);
  return y;
}

Poly frobenius_x_minus_x(const Poly& f, std::uint64_t k) {
  const auto& field = f.field_ptr();
  Poly xx = Poly::x(field);
  Poly y = poly_frobenius_mod(xx, k * field->degree(), f);
  return (y - xx) % f;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

Poly embed_poly(const Poly& f, const FieldPtr& dst) {
  std::vector<Value> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = embed(f.field(), *dst, f.coeff(i));
  return Poly(dst, std::move(out));
}

}  // namespace niho
