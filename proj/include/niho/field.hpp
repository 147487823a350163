#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace niho {

// Encoded field element: the prime-field coordinates in the polynomial basis
// 1, x, ..., x^{n-1}, packed as the integer sum c_i p^i (a bit vector for p = 2).
using Value = std::uint64_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value tagged with the id of the field it lives in. Mixing elements of
// different fields without an explicit embed() is rejected.
struct FieldElem {
  std::uint64_t field_id = 0;
  Value value = 0;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

enum class Representation { kLogTables, kPolynomialBasis };

struct FieldOptions {
  // Largest field order that gets discrete log/antilog tables.
  std::uint64_t table_cutoff = std::uint64_t{1} << 22;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {
struct Tables;
class PolyBasis;
}  // namespace detail

// Embedding data for a field built on top of another one.
struct ParentLink {
  FieldPtr parent;
  std::vector<Value> basis_images;  // image of x^i of the parent basis
  std::optional<Value> designated_root;
};

class Field {
 public:
  // GF(p^n). Without a modulus the lexicographically smallest primitive
  // polynomial is used (smallest as the integer sum c_i p^i).
  static FieldPtr build(std::uint32_t p, std::uint32_t n,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                        FieldOptions options = {});

  // Same arithmetic as `flat`, re-issued under a new id with a parent link.
  static FieldPtr attach_parent(const Field& flat, ParentLink link);

  std::uint64_t id() const { return id_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  bool even_degree() const { return n_ % 2 == 0; }
  // |H_F| = sqrt|F|; throws for odd degree.
  std::uint64_t half_order() const;
  std::string descriptor() const;
  Representation representation() const;
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool modulus_is_primitive() const { return modulus_primitive_; }
  Value primitive() const { return primitive_; }
  const FieldOptions& options() const { return options_; }

  bool contains(Value v) const { return v < order_; }

  // Raw arithmetic on encoded values; callers guarantee membership.
  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value sqr(Value a) const { return mul(a, a); }
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const;
  // a^{p^k}
  Value frobenius(Value a, std::uint64_t k = 1) const;
  Value from_int(std::int64_t c) const;

  std::uint32_t trace(Value a) const;
  Value relative_trace(Value a, std::uint32_t subdegree) const;
  Value tau(Value a) const;
  Value pi(Value a) const;
  bool on_unit_circle(Value a) const;
  std::vector<Value> unit_circle() const;

  std::uint64_t element_order(Value a) const;
  Value exp(std::uint64_t k) const;  // primitive^k

  std::vector<std::uint32_t> coefficients(Value a) const;
  Value from_coefficients(std::span<const std::uint32_t> coeffs) const;

  // Tagged interface.
  FieldElem elem(Value v) const;
  Value value_of(const FieldElem& e) const;
  FieldElem zero() const { return {id_, 0}; }
  FieldElem one() const { return {id_, 1}; }
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  // Towers.
  const FieldPtr& parent() const { return link_.parent; }
  const ParentLink& parent_link() const { return link_; }
  Value embed_from_parent(Value v) const;
  std::optional<Value> designated_root() const { return link_.designated_root; }
  // True when `sub` is this field or an ancestor along the parent chain.
  bool extends(const Field& sub) const;
  std::uint32_t degree_over(const Field& sub) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  ~Field();

 private:
  Field();

  std::uint64_t id_ = 0;
  std::uint32_t p_ = 2;
  std::uint32_t n_ = 1;
  std::uint64_t order_ = 2;
  std::vector<std::uint32_t> modulus_;
  bool modulus_primitive_ = false;
  Value primitive_ = 1;
  FieldOptions options_;
  std::vector<std::uint64_t> group_factors_;  // primes dividing order - 1
  std::shared_ptr<const detail::PolyBasis> basis_;
  std::shared_ptr<const detail::Tables> tables_;
  std::uint64_t trace_mask_ = 0;              // p = 2
  std::vector<std::uint32_t> trace_basis_;   // p odd
  ParentLink link_;
};

FieldPtr build_field(std::uint32_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                     FieldOptions options = {});

std::uint32_t absolute_trace(const Field& f, const FieldElem& x);
FieldElem relative_trace(const Field& f, const FieldElem& x, std::uint32_t subdegree);
FieldElem tau(const Field& f, const FieldElem& x);
FieldElem pi(const Field& f, const FieldElem& x);
std::vector<FieldElem> unit_circle(const Field& f);

// Image of x (an element of src) in dst, following dst's parent chain.
Value embed(const Field& src, const Field& dst, Value x);
FieldElem embed(const Field& src, const Field& dst, const FieldElem& x);

// Smallest primitive polynomial of degree n over GF(p), constant term first.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n);
bool is_irreducible_over_prime(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace niho
