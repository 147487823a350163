#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "niho/field.hpp"

namespace niho {

// Sparse polynomial over F_2 in up to 8 variables. A monomial is packed one
// byte per exponent with x_1 in the most significant used byte, so integer
// order on keys is lex order on exponent tuples.
class MultiPoly2 {
 public:
  using Key = std::uint64_t;

  explicit MultiPoly2(std::uint32_t nvars);
  static MultiPoly2 variable(std::uint32_t nvars, std::uint32_t i);
  static MultiPoly2 one(std::uint32_t nvars);
  static MultiPoly2 from_keys(std::uint32_t nvars, std::vector<Key> keys);

  std::uint32_t nvars() const { return nvars_; }
  std::size_t size() const { return keys_.size(); }
  bool is_zero() const { return keys_.empty(); }
  const std::vector<Key>& keys() const { return keys_; }

  Key pack(const std::vector<std::uint32_t>& exps) const;
  std::vector<std::uint32_t> unpack(Key k) const;
  std::uint32_t total_degree(Key k) const;
  std::uint32_t max_var_degree() const;

  MultiPoly2 permuted(const std::vector<std::uint32_t>& perm) const;  // x_i -> x_{perm[i]}
  MultiPoly2 squared() const;

  friend MultiPoly2 operator+(const MultiPoly2& a, const MultiPoly2& b);
  friend MultiPoly2 operator*(const MultiPoly2& a, const MultiPoly2& b);
  friend bool operator==(const MultiPoly2& a, const MultiPoly2& b) {
    return a.nvars_ == b.nvars_ && a.keys_ == b.keys_;
  }

 private:
  std::uint32_t nvars_;
  std::vector<Key> keys_;  // sorted, unique
};

// Elementary symmetric polynomial sigma_k in n variables, expanded.
MultiPoly2 elementary(std::uint32_t nvars, std::uint32_t k);

// c = sum_{i<j} x_i x_j prod_{other pairs (k,l)} (x_k + x_l)^2.
MultiPoly2 build_c(std::uint32_t nvars = 7);

// Invariance under (1 2) and the n-cycle.
bool is_symmetric(const MultiPoly2& f);

// Index vectors (e_1..e_n) with coefficient 1, lexicographically sorted.
struct ElemExpansion {
  std::uint32_t nvars = 7;
  std::vector<std::vector<std::uint32_t>> terms;
};

// Leading-term elimination carried out on monomial-symmetric coefficients.
ElemExpansion decompose_elementary(const MultiPoly2& f);

// Expands sum of sigma^e back into monomials.
MultiPoly2 expand_elementary(const ElemExpansion& e);

// Independent route: solve for the coefficients over F_2 from evaluations
// of c at random points of GF(2^16). Candidate indices have weighted degree
// `weighted_degree` and at most `max_factors` factors.
ElemExpansion decompose_c_by_evaluation(std::uint32_t nvars, std::uint32_t weighted_degree,
                                        std::uint32_t max_factors, std::uint64_t seed);

// c at a point, by its defining product formula. Characteristic 2.
Value evaluate_c_direct(const Field& f, const std::vector<Value>& r);

// sum over terms of prod sigma_k^{e_k}; sigma has one value per variable count.
Value evaluate_expansion(const ElemExpansion& e, const Field& f, const std::vector<Value>& sigma);

// Shipped table of nonvanishing index vectors (7 variables).
std::string_view shipped_table_csv();
ElemExpansion parse_table_csv(std::string_view csv);
std::string table_csv(const ElemExpansion& e);

struct AppendixDiff {
  std::size_t expected_terms = 0;
  std::size_t computed_terms = 0;
  std::vector<std::vector<std::uint32_t>> missing;  // in the table, not computed
  std::vector<std::vector<std::uint32_t>> extra;    // computed, not in the table
  std::vector<std::vector<std::uint32_t>> weight_violations;
  std::vector<std::vector<std::uint32_t>> zero_pattern_violations;  // e1 = e2 = e5 = e6 = 0
  bool table_sorted = true;
  bool ok() const {
    return missing.empty() && extra.empty() && weight_violations.empty() && zero_pattern_violations.empty() &&
           table_sorted && expected_terms == computed_terms;
  }
  nlohmann::ordered_json to_json() const;
};

AppendixDiff verify_appendix(const ElemExpansion& computed, const ElemExpansion& table);

}  // namespace niho
