#include "niho/factor.hpp"

#include <algorithm>
#include <string>

#include "niho/numtheory.hpp"

namespace niho {

namespace {

Poly random_below(const FieldPtr& field, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Value> dist(0, field->order() - 1);
  std::vector<Value> c(static_cast<std::size_t>(degree));
  for (auto& v : c) v = dist(rng);
  return Poly(field, std::move(c));
}

// Candidate splitter for a product of degree-k factors.
Poly splitter(const Poly& h, const Poly& a, std::uint32_t k) {
  const auto& field = h.field();
  const std::uint64_t steps = std::uint64_t{field.degree()} * k;
  if (field.characteristic() == 2) {
    // a + a^2 + ... + a^{2^{nk-1}} mod h
    Poly t = a % h, acc = t;
    for (std::uint64_t i = 1; i < steps; ++i) {
      t = (t * t) % h;
      acc = acc + t;
    }
    return acc;
  }
  // a^{(q^k-1)/2} = prod_i (a^{(q-1)/2})^{q^i}
  const Poly b = poly_powmod(a, (field.order() - 1) / 2, h);
  Poly acc = b, t = b;
  for (std::uint32_t i = 1; i < k; ++i) {
    t = poly_frobenius_mod(t, field.degree(), h);
    acc = (acc * t) % h;
  }
  return acc - Poly::constant(h.field_ptr(), 1);
}

void split_into(const Poly& h, std::uint32_t k, std::mt19937_64& rng, const SplitOptions& options,
                std::vector<Poly>& out) {
  if (h.degree() <= static_cast<int>(k)) {
    out.push_back(h.monic());
    return;
  }
  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    const Poly a = random_below(h.field_ptr(), h.degree(), rng);
    if (a.degree() < 1) continue;
    const Poly g = poly_gcd(h, splitter(h, a, k));
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_into(g, k, rng, options, out);
      split_into(divmod(h, g).first, k, rng, options, out);
      return;
    }
  }
  throw FieldError("equal-degree split failed after " + std::to_string(options.retry_budget) +
                   " attempts (seed " + std::to_string(options.seed) + ")");
}

bool lex_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (!frobenius_x_minus_x(f, static_cast<std::uint64_t>(d)).is_zero()) return false;
  for (auto r : nt::prime_factors(static_cast<std::uint64_t>(d))) {
    if (poly_gcd(f, frobenius_x_minus_x(f, d / r)).degree() != 0) return false;
  }
  return true;
}

int distinct_roots_in_extension(const Poly& f, std::uint64_t k) {
  if (f.is_zero()) throw FieldError("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  return poly_gcd(f, frobenius_x_minus_x(f, k)).degree();
}

std::vector<std::pair<std::uint32_t, Poly>> distinct_degree_factor(const Poly& f) {
  std::vector<std::pair<std::uint32_t, Poly>> out;
  if (f.degree() < 1) return out;
  Poly rest = f.monic();
  const Poly x = Poly::x(f.field_ptr());
  Poly xq = x;  // x^{q^k} mod rest
  for (std::uint32_t k = 1; rest.degree() >= 2 * static_cast<int>(k); ++k) {
    xq = poly_frobenius_mod(xq, f.field().degree(), rest);
    const Poly g = poly_gcd(rest, xq - x);
    if (g.degree() > 0) {
      out.emplace_back(k, g);
      rest = divmod(rest, g).first;
      xq = xq % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(static_cast<std::uint32_t>(rest.degree()), rest);
  return out;
}

std::vector<Poly> equal_degree_split(const Poly& f, std::uint32_t k, std::mt19937_64& rng,
                                     const SplitOptions& options) {
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  split_into(f.monic(), k, rng, options, out);
  return out;
}

std::vector<Poly> irreducible_factors(const Poly& f, const SplitOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Poly> out;
  for (const auto& [k, g] : distinct_degree_factor(f)) {
    auto parts = equal_degree_split(g, k, rng, options);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Value> roots_in_field(const Poly& f, const SplitOptions& options) {
  if (f.is_zero()) throw FieldError("roots of the zero polynomial");
  std::vector<Value> roots;
  if (f.degree() < 1) return roots;
  const Poly r = frobenius_x_minus_x(f, 1);
  const Poly g = r.is_zero() ? f.monic() : poly_gcd(f, r);
  if (g.degree() < 1) return roots;
  std::mt19937_64 rng(options.seed);
  for (const auto& lin : equal_degree_split(g, 1, rng, options)) roots.push_back(f.field().neg(lin.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

FieldPtr extension_of_degree(const FieldPtr& base, std::uint32_t e, FieldOptions options) {
  if (e == 0) throw FieldError("extension degree must be positive");
  if (e == 1) return base;
  const std::uint32_t p = base->characteristic();
  const std::uint64_t total = std::uint64_t{base->degree()} * e;
  const std::optional<std::uint64_t> size = total > 64 ? std::nullopt : nt::checked_pow(p, static_cast<std::uint32_t>(total));
  if (!size || *size > (std::uint64_t{1} << 63)) {
    throw FieldError("extension of degree " + std::to_string(e) + " over " + base->descriptor() +
                     " exceeds 2^63 elements");
  }
  const FieldPtr flat = Field::build(p, static_cast<std::uint32_t>(total), std::nullopt, options);
  // Image of the base generator: smallest root of the base modulus.
  std::vector<Value> mod(base->modulus().begin(), base->modulus().end());
  for (auto& c : mod) c = flat->from_int(c);
  const auto roots = roots_in_field(Poly(flat, mod));
  if (roots.empty()) throw FieldError("base modulus has no root in the extension");
  const Value rho = roots.front();
  ParentLink link;
  link.parent = base;
  Value pw = 1;
  for (std::uint32_t i = 0; i < base->degree(); ++i) {
    link.basis_images.push_back(pw);
    pw = flat->mul(pw, rho);
  }
  return Field::attach_parent(*flat, std::move(link));
}

FieldPtr build_extension(const FieldPtr& base, const Poly& f, FieldOptions options) {
  if (f.field().id() != base->id()) throw FieldError("defining polynomial is not over the base field");
  if (f.degree() < 2) throw FieldError("defining polynomial must have degree >= 2");
  if (f.leading() != 1) throw FieldError("defining polynomial must be monic");
  if (!is_irreducible(f)) throw FieldError("defining polynomial is reducible over " + base->descriptor());
  const FieldPtr ext = extension_of_degree(base, static_cast<std::uint32_t>(f.degree()), options);
  const auto roots = roots_in_field(embed_poly(f, ext));
  if (roots.empty()) throw FieldError("defining polynomial has no root in its extension");
  ParentLink link = ext->parent_link();
  link.designated_root = roots.front();
  return Field::attach_parent(*ext, std::move(link));
}

}  // namespace niho
