#include "niho/orbits.hpp"

#include <algorithm>
#include <set>

#include "niho/keypoly.hpp"
#include "niho/numtheory.hpp"
#include "niho/symfun.hpp"

namespace niho {

namespace {

void require_tower(const Field& base, const Field& host) {
  if (!base.even_degree()) throw FieldError("orbits need an even-degree base field, got " + base.descriptor());
  if (base.characteristic() != 2) throw FieldError("orbit sums are characteristic 2 only");
  if (!host.extends(base)) throw FieldError(host.descriptor() + " is not built over " + base.descriptor());
}

nlohmann::ordered_json coeffs_json(const Field& host, Value v) { return host.coefficients(v); }

Value pair_term(const Field& h, Value u, Value v) {
  if (u == v) throw FieldError("pair sum over equal elements");
  const Value diff = h.sub(u, v);
  return h.div(h.mul(u, v), h.sqr(diff));
}

std::uint32_t choose2_mod2(std::uint64_t n) { return static_cast<std::uint32_t>((n * (n - 1) / 2) & 1); }

}  // namespace

Value pi_in_host(const Field& base, const Field& host, Value r) {
  if (r == 0) throw FieldError("conjugate-reciprocal map is undefined at zero");
  return host.inv(host.frobenius(r, base.degree() / 2));
}

OrbitReport pi_orbit(const Field& base, const Field& host, Value r) {
  require_tower(base, host);
  if (r == 0 || !host.contains(r)) throw FieldError("orbit of zero or of a foreign value");
  const std::uint32_t ext = host.degree_over(base);
  OrbitReport rep;
  rep.base = base.descriptor();
  rep.host = host.descriptor();
  for (std::uint32_t e = 1; e <= ext; ++e) {
    if (ext % e == 0 && host.frobenius(r, std::uint64_t{base.degree()} * e) == r) {
      rep.degree = e;
      break;
    }
  }
  Value cur = r;
  do {
    rep.orbit.push_back(cur);
    cur = pi_in_host(base, host, cur);
    if (rep.orbit.size() > 2 * std::size_t{ext}) throw FieldError("internal: orbit does not close in the host");
  } while (cur != r);
  const std::uint64_t steps = std::uint64_t{base.degree() / 2} * rep.degree;
  rep.on_unit_circle = rep.degree % 2 == 1 && host.mul(r, host.frobenius(r, steps)) == 1;
  const std::size_t expected = rep.on_unit_circle ? rep.degree : 2 * std::size_t{rep.degree};
  if (rep.orbit.size() != expected) throw FieldError("internal: orbit size contradicts the size criterion");
  return rep;
}

nlohmann::ordered_json OrbitReport::to_json(const Field& h) const {
  nlohmann::ordered_json j;
  j["base"] = base;
  j["host"] = host;
  j["host_modulus"] = h.modulus();
  j["degree"] = degree;
  j["size"] = size();
  j["on_unit_circle"] = on_unit_circle;
  j["orbit"] = nlohmann::ordered_json::array();
  for (auto v : orbit) j["orbit"].push_back(coeffs_json(h, v));
  return j;
}

std::uint32_t half_field_trace(const Field& base, const Field& host, Value s) {
  Value acc = 0, t = s;
  for (std::uint32_t i = 0; i < base.degree() / 2; ++i) {
    acc = host.add(acc, t);
    t = host.sqr(t);
  }
  if (acc > 1) throw FieldError("internal: half-field trace left the prime field");
  return static_cast<std::uint32_t>(acc);
}

ClosedSetSum closed_set_sum(const Field& base, const Field& host, const std::vector<Value>& set) {
  require_tower(base, host);
  std::set<Value> members(set.begin(), set.end());
  if (members.size() != set.size()) throw FieldError("closed set has repeated elements");
  if (members.count(0)) throw FieldError("closed set contains zero");
  std::set<Value> seen;
  ClosedSetSum out;
  out.set_size = set.size();
  for (auto r : set) {
    if (seen.count(r)) continue;
    ++out.orbit_count;
    Value cur = r;
    do {
      seen.insert(cur);
      cur = pi_in_host(base, host, cur);
      if (!members.count(cur)) throw FieldError("set is not closed under the conjugate-reciprocal map");
    } while (cur != r);
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) out.s = host.add(out.s, pair_term(host, set[i], set[j]));
  }
  out.tau_fixed = host.frobenius(out.s, base.degree() / 2) == out.s;
  if (!out.tau_fixed) throw FieldError("internal: pair sum is not fixed by conjugation");
  out.trace = half_field_trace(base, host, out.s);
  const std::uint64_t n = set.size();
  out.expected_trace = out.orbit_count == 1 ? choose2_mod2(n - 1) : (choose2_mod2(n + 1) + out.orbit_count) & 1;
  return out;
}

ClosedSetSum cross_orbit_sum(const Field& base, const Field& host, const std::vector<Value>& orbit1,
                             const std::vector<Value>& orbit2) {
  require_tower(base, host);
  for (auto u : orbit1) {
    if (std::find(orbit2.begin(), orbit2.end(), u) != orbit2.end()) throw FieldError("orbits overlap");
  }
  ClosedSetSum out;
  out.set_size = orbit1.size() + orbit2.size();
  out.orbit_count = 2;
  for (auto u : orbit1) {
    for (auto v : orbit2) out.s = host.add(out.s, pair_term(host, u, v));
  }
  out.tau_fixed = host.frobenius(out.s, base.degree() / 2) == out.s;
  if (!out.tau_fixed) throw FieldError("internal: cross-orbit sum is not fixed by conjugation");
  out.trace = half_field_trace(base, host, out.s);
  out.expected_trace = static_cast<std::uint32_t>((orbit1.size() * orbit2.size()) & 1);
  return out;
}

nlohmann::ordered_json ClosedSetSum::to_json(const Field& host) const {
  nlohmann::ordered_json j;
  j["set_size"] = set_size;
  j["orbit_count"] = orbit_count;
  j["s"] = coeffs_json(host, s);
  j["in_half_field"] = tau_fixed;
  j["trace"] = trace;
  j["expected_trace"] = expected_trace;
  j["formula_holds"] = formula_holds();
  return j;
}

SplitRoots splitting_roots(const Poly& g, const SplitOptions& options) {
  if (g.degree() < 1) throw FieldError("splitting a constant polynomial");
  if (!is_squarefree(g)) throw FieldError("splitting needs a separable polynomial");
  const FieldPtr& base = g.field_ptr();
  SplitRoots out;
  out.factors = irreducible_factors(g, options);
  std::uint64_t l = 1;
  for (const auto& h : out.factors) l = nt::lcm(l, static_cast<std::uint64_t>(h.degree()));
  out.host_degree = static_cast<std::uint32_t>(l);
  out.host = extension_of_degree(base, out.host_degree, base->options());
  const Field& host = *out.host;
  const std::uint32_t n = base->degree();
  for (const auto& h : out.factors) {
    const Poly he = embed_poly(h, out.host);
    const auto found = roots_in_field(he, options);
    if (found.empty()) throw FieldError("internal: factor has no root in the host");
    // Conjugates of one root under x -> x^{|F|} must give every root of the factor.
    std::vector<Value> conj;
    Value r = found.front();
    for (int i = 0; i < h.degree(); ++i) {
      conj.push_back(r);
      r = host.frobenius(r, n);
    }
    std::sort(conj.begin(), conj.end());
    if (conj != found) throw FieldError("internal: Frobenius conjugates disagree with the root search");
    out.roots.insert(out.roots.end(), conj.begin(), conj.end());
  }
  std::sort(out.roots.begin(), out.roots.end());
  const Poly ge = embed_poly(g, out.host);
  for (auto r : out.roots) {
    if (ge.eval(r) != 0) throw FieldError("internal: split root does not vanish");
  }
  if (out.roots.size() != static_cast<std::size_t>(g.degree())) throw FieldError("internal: wrong root count");
  return out;
}

PairSumCheck key_pair_sum_check(const FieldPtr& f, Value a, const SplitOptions& options) {
  const Poly g = key_polynomial(f, a);
  if (!is_squarefree(g)) throw FieldError("key polynomial is inseparable at a = " + std::to_string(a));
  const auto split = splitting_roots(g, options);
  const Field& h = *split.host;
  PairSumCheck out;
  out.field = f->descriptor();
  out.a = a;
  out.host = h.descriptor();
  out.roots = split.roots;
  const auto sum = closed_set_sum(*f, h, split.roots);
  out.s = sum.s;
  out.orbit_count = sum.orbit_count;
  out.b = 1;
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < out.roots.size(); ++j) out.b = h.mul(out.b, h.sub(out.roots[i], out.roots[j]));
  }
  out.c_direct = evaluate_c_direct(h, out.roots);
  out.identity_holds = h.mul(out.s, h.sqr(out.b)) == out.c_direct;
  return out;
}

nlohmann::ordered_json PairSumCheck::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["a"] = a;
  j["host"] = host;
  j["roots"] = roots;
  j["s"] = s;
  j["s_is_zero"] = s_is_zero();
  j["b"] = b;
  j["c_at_roots"] = c_direct;
  j["s_b2_equals_c"] = identity_holds;
  j["orbit_count"] = orbit_count;
  return j;
}

}  // namespace niho
