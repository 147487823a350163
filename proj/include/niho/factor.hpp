#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "niho/field.hpp"
#include "niho/poly.hpp"

namespace niho {

struct SplitOptions {
  std::uint64_t seed = 0x6e69686f;  // deterministic by default
  int retry_budget = 64;
};

// Rabin's test over the coefficient field.
bool is_irreducible(const Poly& f);

// Number of distinct roots of f in the degree-k extension of its field,
// deg gcd(f, x^{q^k} - x).
int distinct_roots_in_extension(const Poly& f, std::uint64_t k);

// For squarefree f: pairs (k, product of the irreducible factors of degree k).
std::vector<std::pair<std::uint32_t, Poly>> distinct_degree_factor(const Poly& f);

// Splits a squarefree product of irreducible degree-k factors. Throws
// FieldError naming the seed once a single split exhausts the retry budget.
std::vector<Poly> equal_degree_split(const Poly& f, std::uint32_t k, std::mt19937_64& rng,
                                     const SplitOptions& options);

// Monic irreducible factors of a squarefree polynomial, sorted by degree.
std::vector<Poly> irreducible_factors(const Poly& f, const SplitOptions& options = {});

// Distinct roots of f lying in its own coefficient field, ascending.
std::vector<Value> roots_in_field(const Poly& f, const SplitOptions& options = {});

// Degree-e extension of base (a fresh flat field with a parent link). e = 1
// returns base itself.
FieldPtr extension_of_degree(const FieldPtr& base, std::uint32_t e, FieldOptions options = {});

// Extension of base by the root of a monic irreducible f of degree >= 2; the
// smallest root of f in the new field is exposed as designated_root().
FieldPtr build_extension(const FieldPtr& base, const Poly& f, FieldOptions options = {});

}  // namespace niho
