#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "niho/field.hpp"
#include "niho/poly.hpp"
#include "niho/weil.hpp"

namespace niho {

// x^7 - a x^4 - tau(a) x^3 + 1.
Poly key_polynomial(const FieldPtr& f, Value a);
// x^{2s-1} - a x^s - tau(a) x^{s-1} + 1, coincident powers merged.
Poly niho_polynomial(const FieldPtr& f, std::uint32_t s, Value a);

// Reverse the coefficients, then conjugate each one over `base` (x -> x^{|H_base|}).
// f may live over any field built on top of base.
Poly conjugate_reciprocal(const Field& base, const Poly& f);

// deg gcd(g, x^{Q+1} - 1), Q = sqrt|F|.
std::uint32_t count_unit_circle_roots(const Poly& g);

// Z(a) for the Niho polynomial; the zero polynomial (s = 1, a = 1) counts all of U.
std::uint32_t niho_root_count(const FieldPtr& f, std::uint32_t s, Value a);

struct RootCountIdentityReport {
  std::string field;
  std::uint32_t s = 0;
  std::uint64_t d = 0;
  bool exponent_valid = false;
  std::map<std::uint32_t, std::uint64_t> z_multiset;  // Z -> #a in F*
  std::vector<Value> mismatches;                      // a with W(a) != (Z(a)-1) Q
  bool ok() const { return exponent_valid && mismatches.empty(); }
  nlohmann::ordered_json to_json() const;
};

// Checks W(a) = (Z(a) - 1) sqrt|F| for every a in F* against direct enumeration.
RootCountIdentityReport verify_root_count_identity(const FieldPtr& f, std::uint32_t s,
                                                   const WeilOptions& options = {});

// Walsh spectrum from root counts alone: W(a) = (Z(a) - 1) Q for a in F*.
SpectrumReport walsh_spectrum_by_roots(const FieldPtr& f, std::uint32_t s, bool parallel = true);

struct RootProfile {
  std::string field;
  Value a = 0;
  bool in_theorem = true;  // false for a = 0
  bool separable = true;
  std::uint32_t distinct_roots = 0;
  // Index e: distinct roots r with [F(r):F] = e, and how many of them lie on U_{F(r)}.
  std::array<std::uint32_t, 8> exact_degree{};
  std::array<std::uint32_t, 8> exact_degree_on_circle{};
  std::uint32_t on_unit_circle = 0;      // Z(a)
  std::uint32_t field_off_circle = 0;    // F \ U_F
  std::uint32_t quadratic_new = 0;       // F_{q^2} \ F
  std::uint32_t cubic_circle_new = 0;    // U_{F_{q^3}} \ F
  std::uint32_t cubic_off_circle = 0;    // F_{q^3} \ (U u F)
  std::uint32_t quintic_circle_new = 0;  // U_{F_{q^5}} \ F
  std::vector<std::uint32_t> orbit_signature;
  std::uint32_t orbit_count = 0;
  std::string case_tag;
  bool matches_case = false;
  std::vector<Value> quadruple_root;  // inseparable a != 1 only

  nlohmann::ordered_json to_json() const;
};

// For a on U_F (inseparable key polynomial).
RootProfile classify_inseparable(const FieldPtr& f, Value a);
// For a off U_F; throws for inseparable input.
RootProfile root_field_profile(const FieldPtr& f, Value a);
// Dispatches on separability.
RootProfile key_root_profile(const FieldPtr& f, Value a);

// The separable case table: Z -> admissible orbit signatures.
const std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>>& separable_case_table();

// x^{|F|/2}, the square root in characteristic 2.
Value square_root(const Field& f, Value x);

}  // namespace niho
