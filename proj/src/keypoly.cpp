#include "niho/keypoly.hpp"

#include <algorithm>
#include <sstream>

#include "niho/kernels.hpp"
#include "niho/numtheory.hpp"

namespace niho {

namespace {

void require_even(const Field& f) {
  if (!f.even_degree()) throw FieldError("needs an even-degree field, got " + f.descriptor());
}

struct Ladder {
  std::array<std::uint32_t, 8> in_ext{};     // N_k: distinct roots in F_{q^k}
  std::array<std::uint32_t, 8> on_circle{};  // U_k for odd k
};

// gcd degrees against x^{q^k} - x and x^{Q^k+1} - 1, k <= 7.
Ladder gcd_ladder(const Poly& g) {
  Ladder out;
  if (g.degree() < 1) return out;
  const auto& field = g.field_ptr();
  const std::uint32_t half = field->degree() / 2;
  const Poly x = Poly::x(field);
  const Poly one = Poly::constant(field, 1);
  Poly xq = x % g;  // x^{Q^j}
  for (std::uint32_t j = 1; j <= 14; ++j) {
    xq = poly_frobenius_mod(xq, half, g);
    if (j % 2 == 0) out.in_ext[j / 2] = static_cast<std::uint32_t>(poly_gcd(g, xq - x).degree());
    if (j % 2 == 1 && j <= 7) {
      out.on_circle[j] = static_cast<std::uint32_t>(poly_gcd(g, (xq * x) % g - one).degree());
    }
  }
  return out;
}

std::string signature_text(const std::vector<std::uint32_t>& sig) {
  std::string s;
  for (std::size_t i = 0; i < sig.size(); ++i) s += (i ? "+" : "") + std::to_string(sig[i]);
  return s;
}

// Every count of p, from the ladder.
void fill_from_ladder(RootProfile& p, const Ladder& l) {
  std::array<std::uint32_t, 8> deg{}, circ{};
  for (std::uint32_t e = 1; e <= 7; ++e) {
    std::int64_t d = l.in_ext[e];
    for (std::uint32_t f = 1; f < e; ++f) {
      if (e % f == 0) d -= deg[f];
    }
    deg[e] = static_cast<std::uint32_t>(d);
    if (e % 2 == 1) {
      std::int64_t c = l.on_circle[e];
      for (std::uint32_t f = 1; f < e; ++f) {
        if (e % f == 0) c -= circ[f];
      }
      circ[e] = static_cast<std::uint32_t>(c);
    }
  }
  p.exact_degree = deg;
  p.exact_degree_on_circle = circ;
  p.distinct_roots = 0;
  for (std::uint32_t e = 1; e <= 7; ++e) p.distinct_roots += deg[e];
  p.on_unit_circle = circ[1];
  p.field_off_circle = deg[1] - circ[1];
  p.quadratic_new = deg[2];
  p.cubic_circle_new = circ[3];
  p.cubic_off_circle = deg[3] - circ[3];
  p.quintic_circle_new = circ[5];
  p.orbit_signature.clear();
  for (std::uint32_t e = 1; e <= 7; ++e) {
    const std::uint32_t small = circ[e], large = deg[e] - circ[e];
    if (small % e != 0 || large % (2 * e) != 0) {
      throw FieldError("internal: roots of degree " + std::to_string(e) + " do not split into orbits");
    }
    for (std::uint32_t i = 0; i < small / e; ++i) p.orbit_signature.push_back(e);
    for (std::uint32_t i = 0; i < large / (2 * e); ++i) p.orbit_signature.push_back(2 * e);
  }
  std::sort(p.orbit_signature.begin(), p.orbit_signature.end());
  p.orbit_count = static_cast<std::uint32_t>(p.orbit_signature.size());
}

bool is_separable(const Poly& g) { return is_squarefree(g); }

}  // namespace

Value square_root(const Field& f, Value x) {
  if (f.characteristic() != 2) throw FieldError("square_root is characteristic 2 only");
  return f.frobenius(x, f.degree() - 1);
}

Poly niho_polynomial(const FieldPtr& f, std::uint32_t s, Value a) {
  require_even(*f);
  if (s == 0) throw FieldError("Niho parameter s must be positive");
  if (!f->contains(a)) throw FieldError("value out of range for " + f->descriptor());
  std::vector<Value> c(2 * s, 0);
  c[2 * s - 1] = f->add(c[2 * s - 1], 1);
  c[s] = f->sub(c[s], a);
  c[s - 1] = f->sub(c[s - 1], f->tau(a));
  c[0] = f->add(c[0], 1);
  return Poly(f, std::move(c));
}

Poly key_polynomial(const FieldPtr& f, Value a) { return niho_polynomial(f, 4, a); }

Poly conjugate_reciprocal(const Field& base, const Poly& f) {
  require_even(base);
  const Field& host = f.field();
  if (!host.extends(base)) throw FieldError("polynomial is not over an extension of " + base.descriptor());
  std::vector<Value> c(f.coeffs().rbegin(), f.coeffs().rend());
  for (auto& v : c) v = host.frobenius(v, base.degree() / 2);
  return Poly(f.field_ptr(), std::move(c));
}

std::uint32_t count_unit_circle_roots(const Poly& g) {
  const Field& f = g.field();
  require_even(f);
  if (g.is_zero()) throw FieldError("root count of the zero polynomial");
  if (g.degree() == 0) return 0;
  const Poly x = Poly::x(g.field_ptr());
  const Poly xq = poly_frobenius_mod(x, f.degree() / 2, g);
  return static_cast<std::uint32_t>(poly_gcd(g, (xq * x) % g - Poly::constant(g.field_ptr(), 1)).degree());
}

std::uint32_t niho_root_count(const FieldPtr& f, std::uint32_t s, Value a) {
  const Poly g = niho_polynomial(f, s, a);
  if (g.is_zero()) return static_cast<std::uint32_t>(f->half_order() + 1);
  return count_unit_circle_roots(g);
}

namespace kernels {

std::vector<std::uint32_t> unit_root_counts_serial(const FieldPtr& f, std::uint32_t s) {
  std::vector<std::uint32_t> out(f->order());
  for (Value a = 0; a < f->order(); ++a) out[a] = niho_root_count(f, s, a);
  return out;
}

std::vector<std::uint32_t> unit_root_counts_parallel(const FieldPtr& f, std::uint32_t s) {
  require_even(*f);
  std::vector<std::uint32_t> out(f->order());
  const auto total = static_cast<std::int64_t>(f->order());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t a = 0; a < total; ++a) out[a] = niho_root_count(f, s, static_cast<Value>(a));
  return out;
}

}  // namespace kernels

nlohmann::ordered_json RootCountIdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["s"] = s;
  j["d"] = d;
  j["exponent_valid"] = exponent_valid;
  j["z_values"] = nlohmann::ordered_json::array();
  for (const auto& [z, c] : z_multiset) j["z_values"].push_back({{"z", z}, {"count", c}});
  j["mismatches"] = mismatches;
  j["ok"] = ok();
  return j;
}

RootCountIdentityReport verify_root_count_identity(const FieldPtr& f, std::uint32_t s,
                                                   const WeilOptions& options) {
  require_even(*f);
  const auto ne = niho_exponent(*f, s);
  RootCountIdentityReport r;
  r.field = f->descriptor();
  r.s = s;
  r.d = ne.d;
  r.exponent_valid = ne.valid;
  if (!ne.valid) return r;
  const auto w = walsh_values(*f, ne.d, options);
  const auto z = options.parallel ? kernels::unit_root_counts_parallel(f, s) : kernels::unit_root_counts_serial(f, s);
  const auto q = static_cast<std::int64_t>(f->half_order());
  for (Value a = 1; a < f->order(); ++a) {
    ++r.z_multiset[z[a]];
    if (w[a] != (static_cast<std::int64_t>(z[a]) - 1) * q) r.mismatches.push_back(a);
  }
  return r;
}

SpectrumReport walsh_spectrum_by_roots(const FieldPtr& f, std::uint32_t s, bool parallel) {
  require_even(*f);
  if (f->characteristic() != 2) throw FieldError("root-count spectrum is characteristic 2 only");
  const auto ne = niho_exponent(*f, s);
  if (!ne.valid) throw FieldError("s = " + std::to_string(s) + " gives a non-invertible exponent over " + f->descriptor());
  const auto z = parallel ? kernels::unit_root_counts_parallel(f, s) : kernels::unit_root_counts_serial(f, s);
  SpectrumReport r;
  r.field = f->descriptor();
  r.d = ne.d;
  r.kind = "walsh";
  r.path = "root-count";
  r.at_zero = 0;
  r.sqrt_order = f->half_order();
  const auto q = static_cast<std::int64_t>(f->half_order());
  for (Value a = 1; a < f->order(); ++a) ++r.spectrum[(static_cast<std::int64_t>(z[a]) - 1) * q];
  return r;
}

const std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>>& separable_case_table() {
  static const std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> table = {
      {0, {{2, 5}, {3, 4}}},
      {1, {{1, 6}, {1, 2, 2, 2}}},
      {2, {{1, 1, 2, 3}}},
      {3, {{1, 1, 1, 4}}},
      {5, {{1, 1, 1, 1, 1, 2}}},
  };
  return table;
}

nlohmann::ordered_json RootProfile::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["a"] = a;
  j["in_theorem"] = in_theorem;
  j["separable"] = separable;
  j["distinct_roots"] = distinct_roots;
  j["on_unit_circle"] = on_unit_circle;
  j["in_field_off_circle"] = field_off_circle;
  j["in_quadratic_ext_not_field"] = quadratic_new;
  j["on_cubic_ext_circle_not_field"] = cubic_circle_new;
  j["in_cubic_ext_off_circle_not_field"] = cubic_off_circle;
  j["on_quintic_ext_circle_not_field"] = quintic_circle_new;
  j["exact_degree"] = std::vector<std::uint32_t>(exact_degree.begin() + 1, exact_degree.end());
  j["exact_degree_on_circle"] =
      std::vector<std::uint32_t>(exact_degree_on_circle.begin() + 1, exact_degree_on_circle.end());
  j["orbit_signature"] = orbit_signature;
  j["orbit_count"] = orbit_count;
  j["case"] = case_tag;
  j["matches_case"] = matches_case;
  if (!quadruple_root.empty()) j["quadruple_root"] = quadruple_root.front();
  return j;
}

RootProfile root_field_profile(const FieldPtr& f, Value a) {
  require_even(*f);
  if (f->characteristic() != 2) throw FieldError("key root profiles are characteristic 2 only");
  const Poly g = key_polynomial(f, a);
  if (!is_separable(g)) {
    throw FieldError("key polynomial is inseparable at a = " + std::to_string(a) + "; use classify_inseparable");
  }
  RootProfile p;
  p.field = f->descriptor();
  p.a = a;
  p.in_theorem = a != 0;
  p.separable = true;
  fill_from_ladder(p, gcd_ladder(g));
  p.case_tag = "Z" + std::to_string(p.on_unit_circle) + ":" + signature_text(p.orbit_signature);
  const auto& table = separable_case_table();
  const auto it = table.find(p.on_unit_circle);
  p.matches_case = p.distinct_roots == 7 && it != table.end() &&
                   std::count(it->second.begin(), it->second.end(), p.orbit_signature) == 1;
  return p;
}

RootProfile classify_inseparable(const FieldPtr& f, Value a) {
  require_even(*f);
  if (f->characteristic() != 2) throw FieldError("key root profiles are characteristic 2 only");
  if (!f->on_unit_circle(a)) throw FieldError("a = " + std::to_string(a) + " is not on the unit circle");
  const Poly g = key_polynomial(f, a);
  RootProfile p;
  p.field = f->descriptor();
  p.a = a;
  p.separable = false;
  fill_from_ladder(p, gcd_ladder(g));
  const bool odd_over_f4 = (f->degree() / 2) % 2 == 1;
  const std::uint64_t q = f->half_order();
  if (a == 1) {
    p.case_tag = odd_over_f4 ? "one:odd" : "one:even";
    p.matches_case = odd_over_f4 ? p.on_unit_circle == 3 : (p.on_unit_circle == 1 && p.field_off_circle == 2);
    return p;
  }
  // a^{-1/4} by two square roots; it must be a root of multiplicity 4 on U.
  const Value r = square_root(*f, square_root(*f, f->inv(a)));
  p.quadruple_root.push_back(r);
  const Poly lin = Poly(f, {r, 1});
  const Poly lin4 = lin * lin * lin * lin;
  const bool quad_ok = f->on_unit_circle(r) && (g % lin4).is_zero() && !(g % (lin4 * lin)).is_zero();
  if (!odd_over_f4) {
    p.case_tag = "unit:even";
    p.matches_case = quad_ok && p.on_unit_circle == 2 && p.field_off_circle == 2;
    return p;
  }
  const bool cube = f->pow(a, (q + 1) / 3) == 1;
  if (cube) {
    p.case_tag = "unit:odd:cube";
    p.matches_case = quad_ok && p.on_unit_circle == 4;
  } else {
    p.case_tag = "unit:odd:noncube";
    p.matches_case = quad_ok && p.on_unit_circle == 1 && p.cubic_circle_new == 3;
  }
  return p;
}

RootProfile key_root_profile(const FieldPtr& f, Value a) {
  if (a != 0 && f->on_unit_circle(a)) return classify_inseparable(f, a);
  return root_field_profile(f, a);
}

}  // namespace niho
