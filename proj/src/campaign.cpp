#include "niho/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "niho/factor.hpp"
#include "niho/numtheory.hpp"
#include "niho/orbits.hpp"
#include "niho/parse.hpp"
#include "niho/poly.hpp"
#include "niho/sequences.hpp"
#include "niho/symfun.hpp"

namespace niho {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::int64_t> kEvenAllowed{-1, 0, 1, 2, 4};
const std::set<std::int64_t> kOddAllowed{-1, 0, 1, 2, 3, 4};
const std::set<std::int64_t> kDegenerate{0, 2};

// Collects the first failure and keeps counting the rest.
struct Checker {
  std::uint64_t failures = 0;
  std::string first;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

std::string modulus_text(const Field& f) {
  std::string out;
  for (auto c : f.modulus()) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

std::string at(const Field& f) { return f.descriptor() + " modulus " + modulus_text(f); }

std::string at(const Field& f, Value a) { return at(f) + " a=" + render_element(f, a); }

template <class T>
json set_json(const std::set<T>& s) {
  json a = json::array();
  for (auto v : s) a.push_back(v);
  return a;
}

std::set<std::int64_t> values_of(const SpectrumReport& r) {
  std::set<std::int64_t> out;
  for (const auto& [v, c] : r.spectrum) out.insert(v);
  return out;
}

// ---- claims ---------------------------------------------------------------

void claim_degenerate_base(const CampaignConfig&, Checker& ck, json& rep) {
  auto f = Field::build(2, 2);
  const auto ne = niho_exponent(*f, 4);
  ck.expect(ne.d == 5, "GF(4) s=4 exponent is " + std::to_string(ne.d) + ", expected 5");
  const auto spec = walsh_spectrum(*f, 5);
  const auto values = values_of(spec);
  ck.expect(values == std::set<std::int64_t>{0, 4}, "Walsh values over F* at " + at(*f) + " d=5 are not {0,4}");
  const auto id = verify_root_count_identity(f, 4);
  std::set<std::uint32_t> zs;
  for (const auto& [z, c] : id.z_multiset) zs.insert(z);
  ck.expect(zs == std::set<std::uint32_t>{1, 3}, "Z values at " + at(*f) + " are not {1,3}");
  ck.expect(id.ok(), "W = (Z-1)Q fails at " + at(*f));
  ck.expect(is_degenerate(*f, 5), "d=5 not flagged degenerate over GF(4)");
  rep["walsh"] = spec.to_json();
  rep["identity"] = id.to_json();
}

void claim_even_smallest_on(const FieldPtr& f, Checker& ck, json& rep) {
  const auto v = verify_niho_field(f, 4, std::uint64_t{1} << 13, false);
  ck.expect(v.d == 13, "exponent at " + at(*f) + " is " + std::to_string(v.d));
  ck.expect(v.identity && v.identity->ok(), "W(a) = (Z(a)-1)*4 fails at " + at(*f));
  if (v.identity && !v.identity->mismatches.empty()) {
    ck.expect(false, "first mismatch at " + at(*f, v.identity->mismatches.front()));
  }
  ck.expect(v.spectrum.total() == 15, "spectrum over F* does not cover 15 elements");
  ck.expect(v.containment_ok(), "W/4 leaves {-1,0,1,2,4} at " + at(*f));
  rep = v.to_json();
}

void claim_even_smallest(const CampaignConfig&, Checker& ck, json& rep) {
  claim_even_smallest_on(Field::build(2, 4), ck, rep);
}

void claim_odd(const CampaignConfig&, Checker& ck, json& rep) {
  for (std::uint32_t n : {6u, 10u}) {
    auto f = Field::build(2, n);
    const auto v = verify_niho_field(f, 4, std::uint64_t{1} << 13, false);
    const std::uint64_t want_d = n == 6 ? 29 : 125;
    ck.expect(v.d == want_d, "exponent at " + at(*f) + " is " + std::to_string(v.d));
    ck.expect(v.path == "direct", "direct path not taken at " + at(*f));
    ck.expect(v.spectrum.total() == f->order() - 1, "spectrum incomplete at " + at(*f));
    ck.expect(v.allowed == kOddAllowed && v.containment_ok(), "W/Q leaves {-1,0,1,2,3,4} at " + at(*f));
    ck.expect(v.ok(), "root-count identity fails at " + at(*f));
    rep[f->descriptor()] = v.to_json();
  }
}

void claim_even_larger(const CampaignConfig&, Checker& ck, json& rep) {
  for (std::uint32_t n : {8u, 12u}) {
    auto f = Field::build(2, n);
    const auto v = verify_niho_field(f, 4, std::uint64_t{1} << 13, false);
    ck.expect(v.path == "direct", "direct path not taken at " + at(*f));
    ck.expect(v.identity && v.identity->ok(), "direct and root-count values differ at " + at(*f));
    ck.expect(v.allowed == kEvenAllowed && v.containment_ok(), "W/Q leaves {-1,0,1,2,4} at " + at(*f));
    rep[f->descriptor()] = v.to_json();
  }
  auto big = Field::build(2, 16);
  const auto v = verify_niho_field(big, 4, 0, true);
  ck.expect(v.path == "root-count", "root-count path not taken at " + at(*big));
  ck.expect(v.d == 1021, "exponent at " + at(*big) + " is " + std::to_string(v.d));
  ck.expect(v.spectrum.total() == big->order() - 1, "root-count spectrum incomplete at " + at(*big));
  const auto q = static_cast<std::int64_t>(big->half_order());
  std::set<std::int64_t> zs;
  for (const auto& [w, c] : v.spectrum.spectrum) zs.insert(w / q + 1);
  for (auto z : zs) ck.expect(std::set<std::int64_t>{0, 1, 2, 3, 5}.count(z), "Z = " + std::to_string(z) + " at " + at(*big));
  ck.expect(v.containment_ok(), "W/Q leaves {-1,0,1,2,4} at " + at(*big));
  rep[big->descriptor()] = v.to_json();
  rep[big->descriptor()]["z_values"] = set_json(zs);
}

void claim_table(const CampaignConfig& config, Checker& ck, json& rep) {
  const auto c = build_c(7);
  ck.expect(is_symmetric(c), "c is not symmetric");
  const auto computed = decompose_elementary(c);
  ElemExpansion table;
  if (config.table_csv) {
    std::ifstream in(*config.table_csv, std::ios::binary);
    if (!in) throw UsageError("cannot read table " + *config.table_csv);
    std::stringstream ss;
    ss << in.rdbuf();
    table = parse_table_csv(ss.str());
  } else {
    table = parse_table_csv(shipped_table_csv());
  }
  const auto diff = verify_appendix(computed, table);
  ck.expect(computed.terms.size() == 218, std::to_string(computed.terms.size()) + " terms computed, expected 218");
  ck.expect(diff.ok(), std::to_string(diff.missing.size() + diff.extra.size()) + " diffs against the " +
                           (config.table_csv ? "table " + *config.table_csv : std::string("shipped table")));
  rep["monomials_in_c"] = c.size();
  rep["terms"] = computed.terms.size();
  rep["diff"] = diff.to_json();
}

void claim_ternary(const CampaignConfig&, Checker& ck, json& rep) {
  auto f = Field::build(3, 2);
  const auto w = weil_sum(*f, 5, Value{1});
  ck.expect(w.value().has_value(), "W is not rational at " + at(*f, 1));
  ck.expect(w.value() == std::optional<std::int64_t>{3}, "W(1) at " + at(*f, 1) + " d=5 is not 3");
  rep["field"] = f->descriptor();
  rep["modulus"] = f->modulus();
  rep["d"] = 5;
  rep["a"] = 1;
  rep["fiber_counts"] = w.fiber_counts;
  if (w.value()) rep["value"] = *w.value();
}

void claim_census(const CampaignConfig&, Checker& ck, json& rep) {
  for (std::uint32_t n : {6u, 4u}) {
    auto f = Field::build(2, n);
    std::map<std::uint32_t, std::uint64_t> census;
    std::uint32_t z_one = 0;
    for (auto a : f->unit_circle()) {
      const auto z = niho_root_count(f, 4, a);
      if (a == 1) z_one = z;
      else ++census[z];
    }
    const std::uint64_t q = f->half_order();
    if (n == 6) {
      ck.expect(z_one == 3, "Z(1) = " + std::to_string(z_one) + " at " + at(*f));
      ck.expect(census[4] == (q - 2) / 3, "count of Z=4 on U at " + at(*f));
      ck.expect(census[1] == 2 * (q + 1) / 3, "count of Z=1 on U at " + at(*f));
      ck.expect(census.size() == 2, "unexpected Z values on U at " + at(*f));
    } else {
      ck.expect(z_one == 1, "Z(1) = " + std::to_string(z_one) + " at " + at(*f));
      ck.expect(census.size() == 1 && census[2] == q, "unit-circle a != 1 do not all give Z=2 at " + at(*f));
    }
    json j;
    j["z_at_one"] = z_one;
    j["others"] = json::array();
    for (const auto& [z, c] : census) j["others"].push_back({{"z", z}, {"count", c}});
    rep[f->descriptor()] = j;
  }
}

void claim_case_exclusion(const CampaignConfig&, Checker& ck, json& rep) {
  for (std::uint32_t n : {4u, 6u, 8u}) {
    auto f = Field::build(2, n);
    std::uint64_t separable = 0;
    std::map<std::string, std::uint64_t> tags;
    for (Value a = 1; a < f->order(); ++a) {
      if (!is_squarefree(key_polynomial(f, a))) continue;
      ++separable;
      const auto p = root_field_profile(f, a);
      ck.expect(p.on_unit_circle != 4 && p.on_unit_circle != 6 && p.on_unit_circle != 7,
                "Z = " + std::to_string(p.on_unit_circle) + " at " + at(*f, a));
      ck.expect(p.matches_case, "orbit signature " + p.case_tag + " outside the case table at " + at(*f, a));
      ck.expect(p.orbit_count % 2 == 0, "odd orbit count at " + at(*f, a));
      ++tags[p.case_tag];
    }
    json j;
    j["separable"] = separable;
    j["cases"] = json::array();
    for (const auto& [t, c] : tags) j["cases"].push_back({{"case", t}, {"count", c}});
    rep[f->descriptor()] = j;
  }
}

struct Host {
  FieldPtr base;
  FieldPtr host;
  std::uint32_t ext = 1;
};

Value random_nonzero(const Field& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Value>(1, f.order() - 1)(rng);
}

std::vector<Value> orbit_of(const Host& h, Value r) { return pi_orbit(*h.base, *h.host, r).orbit; }

void claim_orbit_properties(const CampaignConfig& config, Checker& ck, json& rep) {
  std::vector<Host> hosts;
  for (std::uint32_t n : {4u, 6u}) {
    auto base = Field::build(2, n);
    for (std::uint32_t e = 1; e <= 5; ++e) hosts.push_back({base, extension_of_degree(base, e, base->options()), e});
  }
  std::mt19937_64 rng(config.seed);
  const auto pick = [&]() -> const Host& { return hosts[rng() % hosts.size()]; };
  const std::string seed = " seed=" + std::to_string(config.seed);

  std::map<std::string, std::uint64_t> sizes;
  for (std::uint32_t t = 0; t < config.property_trials; ++t) {
    const Host& h = pick();
    const Field& H = *h.host;
    const Value r = random_nonzero(H, rng);
    const std::uint32_t q_deg = h.base->degree();
    std::uint32_t e = 1;
    while (H.frobenius(r, std::uint64_t{q_deg} * e) != r) ++e;
    const bool circle = e % 2 == 1 && H.mul(r, H.frobenius(r, std::uint64_t{q_deg / 2} * e)) == 1;
    const std::size_t expected = circle ? e : 2 * std::size_t{e};
    const auto o = pi_orbit(*h.base, H, r);
    // Walk the orbit independently: pi^k(r) = r^{(-Q)^k}.
    std::size_t walked = 0;
    Value cur = r;
    do {
      cur = H.inv(H.frobenius(cur, q_deg / 2));
      ++walked;
    } while (cur != r && walked <= 2 * std::size_t{h.ext});
    const std::string where = " at " + H.descriptor() + " over " + h.base->descriptor() + " r=" +
                              std::to_string(r) + " trial=" + std::to_string(t) + seed;
    ck.expect(o.degree == e, "orbit degree" + where);
    ck.expect(o.size() == expected && walked == expected, "orbit size" + where);
    ++sizes[(circle ? "e:" : "2e:") + std::to_string(e)];
  }

  std::uint64_t closed_ok = 0, cross_ok = 0;
  for (std::uint32_t t = 0; t < config.property_trials; ++t) {
    const Host& h = pick();
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    std::vector<Value> set;
    std::uint32_t got = 0;
    for (std::uint32_t tries = 0; got < k && tries < 16; ++tries) {
      const auto o = orbit_of(h, random_nonzero(*h.host, rng));
      if (std::find(set.begin(), set.end(), o.front()) != set.end()) continue;
      set.insert(set.end(), o.begin(), o.end());
      ++got;
    }
    const auto sum = closed_set_sum(*h.base, *h.host, set);
    const std::string where = " at " + h.host->descriptor() + " over " + h.base->descriptor() + " |R|=" +
                              std::to_string(set.size()) + " t=" + std::to_string(sum.orbit_count) +
                              " trial=" + std::to_string(t) + seed;
    ck.expect(sum.orbit_count == got, "orbit count" + where);
    ck.expect(sum.formula_holds(), "closed-set trace formula" + where);
    closed_ok += sum.formula_holds();
  }
  for (std::uint32_t t = 0; t < config.property_trials; ++t) {
    const Host& h = pick();
    const auto o1 = orbit_of(h, random_nonzero(*h.host, rng));
    std::vector<Value> o2;
    for (int tries = 0; tries < 16 && o2.empty(); ++tries) {
      auto cand = orbit_of(h, random_nonzero(*h.host, rng));
      if (std::find(o1.begin(), o1.end(), cand.front()) == o1.end()) o2 = std::move(cand);
    }
    if (o2.empty()) throw FieldError("no second orbit found in " + h.host->descriptor());
    const auto sum = cross_orbit_sum(*h.base, *h.host, o1, o2);
    ck.expect(sum.formula_holds(), "cross-orbit trace formula at " + h.host->descriptor() + " over " +
                                       h.base->descriptor() + " sizes " + std::to_string(o1.size()) + "," +
                                       std::to_string(o2.size()) + " trial=" + std::to_string(t) + seed);
    cross_ok += sum.formula_holds();
  }
  rep["trials_each"] = config.property_trials;
  rep["seed"] = config.seed;
  rep["orbit_size_kinds"] = json::array();
  for (const auto& [k, c] : sizes) rep["orbit_size_kinds"].push_back({{"kind", k}, {"count", c}});
  rep["closed_set_formula_holds"] = closed_ok;
  rep["cross_orbit_formula_holds"] = cross_ok;
}

void pair_sum_into(const FieldPtr& f, Value a, Checker& ck, json& rows) {
  const auto r = key_pair_sum_check(f, a);
  ck.expect(r.s_is_zero(), "S != 0 at " + at(*f, a));
  ck.expect(r.identity_holds, "S b^2 != c(roots) at " + at(*f, a));
  ck.expect(r.orbit_count % 2 == 0, "odd orbit count at " + at(*f, a));
  rows.push_back({{"a", render_element(*f, a)}, {"host", r.host}, {"s_is_zero", r.s_is_zero()},
                  {"s_b2_equals_c", r.identity_holds}, {"orbit_count", r.orbit_count}});
}

void claim_pair_sum(const CampaignConfig& config, Checker& ck, json& rep) {
  auto f16 = Field::build(2, 4);
  json rows16 = json::array();
  for (Value a = 1; a < f16->order(); ++a) {
    if (is_squarefree(key_polynomial(f16, a))) pair_sum_into(f16, a, ck, rows16);
  }
  ck.expect(rows16.size() == 10, std::to_string(rows16.size()) + " separable a over GF(16), expected 10");
  rep["2^4"] = rows16;

  auto f64 = Field::build(2, 6);
  std::mt19937_64 rng(config.seed);
  std::set<Value> chosen;
  json rows64 = json::array();
  std::uint64_t rejected_host = 0;
  for (std::uint32_t draws = 0; chosen.size() < 20 && draws < 10000; ++draws) {
    const Value a = random_nonzero(*f64, rng);
    if (chosen.count(a)) continue;
    const Poly g = key_polynomial(f64, a);
    if (!is_squarefree(g)) continue;
    std::uint64_t l = 1;
    for (const auto& [k, part] : distinct_degree_factor(g)) l = nt::lcm(l, k);
    if (std::uint64_t{f64->degree()} * l > 63) {
      ++rejected_host;
      continue;
    }
    chosen.insert(a);
    pair_sum_into(f64, a, ck, rows64);
  }
  ck.expect(chosen.size() == 20, "only " + std::to_string(chosen.size()) + " separable a sampled over GF(64) seed=" +
                                     std::to_string(config.seed));
  rep["2^6"] = rows64;
  rep["seed"] = config.seed;
  rep["rejected_for_host_size"] = rejected_host;
}

void claim_equivalence(const CampaignConfig&, Checker& ck, json& rep) {
  rep = json::array();
  for (auto [n, d] : {std::pair{4u, 7ull}, std::pair{4u, 13ull}, std::pair{6u, 29ull}}) {
    auto f = Field::build(2, n);
    const auto r = spectrum_equivalence_check(*f, d);
    ck.expect(r.spectra_equal(), "crosscorrelation and W-1 multisets differ at " + at(*f) + " d=" + std::to_string(d));
    ck.expect(r.weights_checked && r.weights_equal(), "code weights differ at " + at(*f) + " d=" + std::to_string(d));
    rep.push_back(r.to_json());
  }
}

void claim_modulus_invariance(const CampaignConfig&, Checker& ck, json& rep) {
  json base;
  auto f0 = Field::build(2, 4);
  claim_even_smallest_on(f0, ck, base);
  const auto v0 = verify_niho_field(f0, 4, std::uint64_t{1} << 13, false);
  rep["reference"] = {{"modulus", f0->modulus()}, {"spectrum", v0.spectrum.to_json()["spectrum"]}};
  rep["alternatives"] = json::array();
  // x^4 + x + 1 is primitive, x^4 + x^3 + x^2 + x + 1 is not.
  for (const std::vector<std::uint32_t>& m : {std::vector<std::uint32_t>{1, 1, 0, 0, 1}, {1, 1, 1, 1, 1}}) {
    auto f = Field::build(2, 4, m);
    json sub;
    claim_even_smallest_on(f, ck, sub);
    const auto v = verify_niho_field(f, 4, std::uint64_t{1} << 13, false);
    ck.expect(v.spectrum.spectrum == v0.spectrum.spectrum, "spectrum multiset changes under " + at(*f));
    ck.expect(v.identity->z_multiset == v0.identity->z_multiset, "Z multiset changes under " + at(*f));
    rep["alternatives"].push_back({{"modulus", f->modulus()}, {"spectrum", v.spectrum.to_json()["spectrum"]},
                                   {"identical", v.spectrum.spectrum == v0.spectrum.spectrum}});
  }
}

using ClaimFn = std::function<void(const CampaignConfig&, Checker&, json&)>;

const std::map<std::string, ClaimFn>& claim_registry() {
  static const std::map<std::string, ClaimFn> table = {
      {"c01-degenerate-base", claim_degenerate_base},
      {"c02-even-smallest", claim_even_smallest},
      {"c03-odd", claim_odd},
      {"c04-even-larger", claim_even_larger},
      {"c05-elementary-table", claim_table},
      {"c06-ternary-value", claim_ternary},
      {"c07-unit-circle-census", claim_census},
      {"c08-case-exclusion", claim_case_exclusion},
      {"c09-orbit-properties", claim_orbit_properties},
      {"c10-pair-sum-vanishes", claim_pair_sum},
      {"c11-spectrum-equivalence", claim_equivalence},
      {"c12-modulus-invariance", claim_modulus_invariance},
  };
  return table;
}

std::string field_claim_id(const std::string& field, std::uint32_t s) {
  std::string id = "field-" + field + "-s" + std::to_string(s);
  std::replace(id.begin(), id.end(), '^', '_');
  return id;
}

std::vector<ClaimSpec> selected_claims(const CampaignConfig& config) {
  std::vector<ClaimSpec> all = acceptance_claims();
  for (const auto& fd : config.fields) {
    for (auto s : config.s_values) all.push_back({field_claim_id(fd, s), "Niho spectrum over " + fd, 0});
  }
  if (config.only.empty()) return all;
  std::vector<ClaimSpec> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& want : config.only) {
      if (want == all[i].id || want == std::to_string(i + 1) || all[i].id.starts_with(want + "-")) {
        out.push_back(all[i]);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool NihoVerification::containment_ok() const {
  if (allowed.empty()) return true;
  if (exact_set) return normalized == allowed && degenerate;
  return std::includes(allowed.begin(), allowed.end(), normalized.begin(), normalized.end());
}

json NihoVerification::to_json() const {
  json j;
  j["field"] = field;
  j["modulus"] = modulus;
  j["m"] = m;
  j["s"] = s;
  j["d"] = d;
  j["path"] = path;
  j["degenerate"] = degenerate;
  j["spectrum"] = spectrum.to_json();
  j["normalized_values"] = set_json(normalized);
  if (!allowed.empty()) {
    j["allowed"] = set_json(allowed);
    j["containment_ok"] = containment_ok();
  }
  if (identity) {
    j["root_count_identity"] = identity->to_json();
  }
  j["ok"] = ok();
  return j;
}

NihoVerification verify_niho_field(const FieldPtr& f, std::uint32_t s, std::uint64_t direct_cap,
                                   bool allow_root_count) {
  if (f->characteristic() != 2 || !f->even_degree()) {
    throw UsageError("Niho verification needs GF(2^n) with n even, got " + f->descriptor());
  }
  NihoVerification v;
  v.field = f->descriptor();
  v.modulus = f->modulus();
  v.m = f->degree() / 2;
  v.s = s;
  const auto ne = niho_exponent(*f, s);
  if (!ne.valid) throw UsageError("s = " + std::to_string(s) + " gives a non-invertible exponent over " + v.field);
  v.d = ne.d;
  v.degenerate = is_degenerate(*f, v.d);
  if (f->order() <= direct_cap) {
    v.path = "direct";
    WeilOptions opt;
    opt.direct_cap = direct_cap;
    v.identity = verify_root_count_identity(f, s, opt);
    v.spectrum = walsh_spectrum(*f, v.d, opt);
  } else if (allow_root_count) {
    v.path = "root-count";
    v.spectrum = walsh_spectrum_by_roots(f, s);
  } else {
    throw UsageError("|F| = " + std::to_string(f->order()) + " exceeds the direct cap " + std::to_string(direct_cap) +
                     "; pass --root-count-only");
  }
  const auto q = static_cast<std::int64_t>(f->half_order());
  for (const auto& [w, c] : v.spectrum.spectrum) v.normalized.insert(w / q);
  if (s == 4) {
    if (v.m == 1) {
      v.allowed = kDegenerate;
      v.exact_set = true;
    } else {
      v.allowed = v.m % 2 == 0 ? kEvenAllowed : kOddAllowed;
    }
  }
  return v;
}

void CampaignConfig::validate() const {
  for (const auto& fd : fields) {
    const auto d = parse_field_descriptor(fd);
    if (d.p != 2 || d.n % 2 != 0) throw UsageError("campaign field " + fd + " is not GF(2^n) with n even");
    if (d.n > 40) throw UsageError("campaign field " + fd + " is beyond desk scale");
  }
  for (auto s : s_values) {
    if (s < 1) throw UsageError("s must be positive");
  }
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv, got " + format);
  if (property_trials == 0) throw UsageError("property trials must be positive");
}

json CampaignConfig::to_json() const {
  json j;
  j["fields"] = fields;
  j["s_values"] = s_values;
  j["direct_cap"] = direct_cap;
  j["seed"] = seed;
  j["format"] = format;
  j["table"] = table_csv ? json(*table_csv) : json(nullptr);
  j["only"] = only;
  j["property_trials"] = property_trials;
  return j;
}

const std::vector<ClaimSpec>& acceptance_claims() {
  static const std::vector<ClaimSpec> claims = {
      {"c01-degenerate-base", "GF(4), d = 5: degenerate spectrum", 1000},
      {"c02-even-smallest", "GF(16), d = 13: W = (Z-1)4 and W/4 in {-1,0,1,2,4}", 1000},
      {"c03-odd", "GF(64), GF(1024): W/Q in {-1,0,1,2,3,4}", 30000},
      {"c04-even-larger", "GF(256), GF(4096) direct; GF(65536) by root counts", 600000},
      {"c05-elementary-table", "218 elementary-symmetric terms match the table", 300000},
      {"c06-ternary-value", "GF(9), d = 5, a = 1: W = 3", 1000},
      {"c07-unit-circle-census", "Z census on the unit circle of GF(64), GF(16)", 1000},
      {"c08-case-exclusion", "separable a: Z not in {4,6,7}, case table, even orbit count", 60000},
      {"c09-orbit-properties", "randomized orbit size and trace formula trials", 120000},
      {"c10-pair-sum-vanishes", "pair sum S = 0 with S b^2 = c cross-check", 120000},
      {"c11-spectrum-equivalence", "crosscorrelation, Walsh and code weights agree", 30000},
      {"c12-modulus-invariance", "GF(16) spectrum independent of the modulus", 0},
  };
  return claims;
}

ClaimResult run_claim(const std::string& id, const CampaignConfig& config) {
  ClaimResult r;
  r.id = id;
  for (const auto& c : acceptance_claims()) {
    if (c.id == id) {
      r.title = c.title;
      r.limit_ms = c.limit_ms;
    }
  }
  ClaimFn fn;
  if (auto it = claim_registry().find(id); it != claim_registry().end()) {
    fn = it->second;
  } else {
    for (const auto& fd : config.fields) {
      for (auto s : config.s_values) {
        if (field_claim_id(fd, s) != id) continue;
        r.title = "Niho spectrum over " + fd;
        fn = [fd, s](const CampaignConfig& cfg, Checker& ck, json& rep) {
          auto f = field_from_text(fd);
          const auto v = verify_niho_field(f, s, cfg.direct_cap, true);
          ck.expect(v.ok(), "spectrum check fails at " + at(*f) + " s=" + std::to_string(s) + " path " + v.path);
          rep = v.to_json();
        };
      }
    }
  }
  if (!fn) throw UsageError("unknown claim " + id);
  Checker ck;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(config, ck, r.report);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    ck.expect(false, std::string("exception: ") + e.what() + " seed=" + std::to_string(config.seed));
  }
  r.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.pass = ck.ok();
  r.detail = ck.ok() ? "ok" : ck.first + (ck.failures > 1 ? " (+" + std::to_string(ck.failures - 1) + " more)" : "");
  return r;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto specs = selected_claims(config);
  if (specs.empty()) throw UsageError("no claim matches the selection");
  CampaignSummary out;
  out.claims.resize(specs.size());
  std::vector<std::string> usage_errors(specs.size());
  const int n = static_cast<int>(specs.size());
#pragma omp parallel for schedule(dynamic, 1) if (config.concurrent)
  for (int i = 0; i < n; ++i) {
    try {
      out.claims[i] = run_claim(specs[i].id, config);
    } catch (const UsageError& e) {
      usage_errors[i] = e.what();
    }
  }
  for (const auto& e : usage_errors) {
    if (!e.empty()) throw UsageError(e);
  }
  return out;
}

bool CampaignSummary::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

bool CampaignSummary::all_within_limits() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.within_limit(); });
}

std::string CampaignSummary::to_text() const {
  std::ostringstream os;
  std::size_t w = 5;
  for (const auto& c : claims) w = std::max(w, c.id.size());
  os << std::left;
  os.width(static_cast<std::streamsize>(w + 2));
  os << "claim" << "status  runtime_ms  detail\n";
  for (const auto& c : claims) {
    os.width(static_cast<std::streamsize>(w + 2));
    os << c.id;
    os.width(8);
    os << (c.pass ? "PASS" : "FAIL");
    os.width(12);
    os << c.elapsed_ms;
    os << c.detail << "\n";
  }
  os << (all_pass() ? "all claims pass" : "some claims fail") << "\n";
  return os.str();
}

json CampaignSummary::to_json() const {
  json j;
  j["claims"] = json::array();
  for (const auto& c : claims) {
    j["claims"].push_back({{"id", c.id}, {"title", c.title}, {"status", c.pass ? "pass" : "fail"},
                           {"runtime_ms", c.elapsed_ms}, {"detail", c.detail}});
  }
  j["all_pass"] = all_pass();
  return j;
}

std::string CampaignSummary::to_csv() const {
  std::string out = "claim,status,runtime_ms\n";
  for (const auto& c : claims) {
    out += c.id + "," + (c.pass ? "pass" : "fail") + "," + std::to_string(c.elapsed_ms) + "\n";
  }
  return out;
}

void write_campaign_reports(const CampaignSummary& summary, const CampaignConfig& config) {
  if (config.out_dir.empty()) return;
  namespace fs = std::filesystem;
  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + config.out_dir + ": " + ec.message());
  for (const auto& c : summary.claims) {
    json line;
    line["claim"] = c.id;
    line["status"] = c.pass ? "pass" : "fail";
    line["detail"] = c.detail;
    line["config"] = config.to_json();
    line["report"] = c.report;
    std::ofstream os(dir / (c.id + ".jsonl"), std::ios::app | std::ios::binary);
    os << line.dump() << "\n";
    if (!os) throw std::runtime_error("write failed for " + c.id);
  }
  std::ofstream(dir / "summary.txt", std::ios::binary) << summary.to_text();
  if (config.format == "csv") {
    std::ofstream(dir / "summary.csv", std::ios::binary) << summary.to_csv();
  } else {
    std::ofstream(dir / "summary.json", std::ios::binary) << summary.to_json().dump(2) << "\n";
  }
}

}  // namespace niho
