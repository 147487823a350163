#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gen.hpp"
#include "niho/kernels.hpp"
#include "niho/keypoly.hpp"
#include "niho/orbits.hpp"
#include "niho/poly.hpp"
#include "oracle.hpp"

using namespace niho;

namespace {

std::map<std::uint32_t, std::uint64_t> brute_z_multiset(const Field& f, std::uint32_t s) {
  const auto g = oracle::gf2_from_modulus(f.modulus());
  std::map<std::uint32_t, std::uint64_t> m;
  for (Value a = 1; a < f.order(); ++a) ++m[oracle::unit_circle_roots(g, s, a)];
  return m;
}

}  // namespace

TEST_CASE("key polynomial coefficients") {
  auto f = Field::build(2, 4);
  const Value a = f->exp(3);
  const auto g = key_polynomial(f, a);
  CHECK(g.degree() == 7);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(3) == f->tau(a));
  CHECK(g.coeff(4) == a);
  CHECK(g.coeff(7) == 1);
  CHECK(niho_polynomial(f, 4, a) == g);
  // s = 1: x - a x - tau(a) + 1 collapses; at a = 1 it vanishes.
  CHECK(niho_polynomial(f, 1, 1).is_zero());
  CHECK(niho_root_count(f, 1, 1) == f->half_order() + 1);
}

TEST_CASE("key polynomials are self-conjugate-reciprocal") {
  auto rng = gen::stream(31);
  for (std::uint32_t n : {2u, 4u, 6u, 8u}) {
    auto f = Field::build(2, n);
    for (int t = 0; t < 50; ++t) {
      const Value a = gen::element(*f, rng);
      const auto g = key_polynomial(f, a);
      CHECK(conjugate_reciprocal(*f, g) == g);
      for (std::uint32_t s : {2u, 3u, 5u}) {
        const auto h = niho_polynomial(f, s, a);
        CHECK(conjugate_reciprocal(*f, h) == h);
      }
    }
  }
}

TEST_CASE("unit-circle root counts against enumeration") {
  auto rng = gen::stream(32);
  for (std::uint32_t n : {4u, 6u, 8u, 10u}) {
    auto f = Field::build(2, n);
    const auto g = oracle::gf2_from_modulus(f->modulus());
    for (int t = 0; t < 60; ++t) {
      const Value a = gen::element(*f, rng);
      const std::uint32_t s = 2 + static_cast<std::uint32_t>(gen::below(5, rng));
      INFO(f->descriptor() << " s=" << s << " a=" << a);
      CHECK(niho_root_count(f, s, a) == oracle::unit_circle_roots(g, s, a));
    }
  }
}

TEST_CASE("root-count identity and frozen Z multisets") {
  // Frozen from brute-force unit-circle enumeration (checked live below for n <= 8).
  const std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> frozen{
      {2, {{1, 2}, {3, 1}}},
      {4, {{0, 4}, {1, 5}, {2, 4}, {3, 2}}},
      {6, {{0, 18}, {1, 27}, {2, 12}, {3, 4}, {4, 2}}},
      {8, {{0, 88}, {1, 89}, {2, 56}, {3, 20}, {5, 2}}},
  };
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 10u, 12u}) {
    auto f = Field::build(2, n);
    const auto r = verify_root_count_identity(f, 4);
    INFO(f->descriptor());
    CHECK(r.ok());
    CHECK(r.d == niho_exponent(*f, 4).d);
    if (frozen.count(n)) {
      CHECK(r.z_multiset == frozen.at(n));
      CHECK(brute_z_multiset(*f, 4) == frozen.at(n));
    }
  }
}

TEST_CASE("root-count identity for other Niho parameters") {
  for (std::uint32_t n : {4u, 6u, 8u}) {
    auto f = Field::build(2, n);
    for (std::uint32_t s = 1; s <= 7; ++s) {
      if (!niho_exponent(*f, s).valid) continue;
      INFO(f->descriptor() << " s=" << s);
      CHECK(verify_root_count_identity(f, s).ok());
    }
  }
}

TEST_CASE("parallel and serial root counts agree") {
  auto f = Field::build(2, 10);
  CHECK(kernels::unit_root_counts_serial(f, 4) == kernels::unit_root_counts_parallel(f, 4));
  CHECK(walsh_spectrum_by_roots(f, 4, false).spectrum == walsh_spectrum_by_roots(f, 4, true).spectrum);
}

TEST_CASE("Z values stay in {0,1,2,3,5} when [F:F_4] is even") {
  for (std::uint32_t n : {4u, 8u, 12u}) {
    auto f = Field::build(2, n);
    for (const auto& [w, c] : walsh_spectrum_by_roots(f, 4).spectrum) {
      const auto z = w / static_cast<std::int64_t>(f->half_order()) + 1;
      CHECK(std::set<std::int64_t>{0, 1, 2, 3, 5}.count(z) == 1);
    }
  }
}

TEST_CASE("unit-circle census") {
  for (std::uint32_t n : {6u, 10u}) {
    auto f = Field::build(2, n);
    const std::uint64_t q = f->half_order();
    std::map<std::uint32_t, std::uint64_t> census;
    for (auto a : f->unit_circle()) {
      if (a == 1) CHECK(niho_root_count(f, 4, a) == 3);
      else ++census[niho_root_count(f, 4, a)];
    }
    CHECK(census == std::map<std::uint32_t, std::uint64_t>{{1, 2 * (q + 1) / 3}, {4, (q - 2) / 3}});
  }
  for (std::uint32_t n : {4u, 8u, 12u}) {
    auto f = Field::build(2, n);
    for (auto a : f->unit_circle()) CHECK(niho_root_count(f, 4, a) == (a == 1 ? 1u : 2u));
  }
}

TEST_CASE("inseparable profiles on the unit circle") {
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 10u}) {
    auto f = Field::build(2, n);
    const bool odd = (n / 2) % 2 == 1;
    for (auto a : f->unit_circle()) {
      const auto p = key_root_profile(f, a);
      INFO(f->descriptor() << " a=" << a << " " << p.case_tag);
      CHECK_FALSE(p.separable);
      CHECK(p.matches_case);
      if (a == 1) CHECK(p.case_tag == (odd ? "one:odd" : "one:even"));
      else CHECK(p.case_tag.starts_with(odd ? "unit:odd" : "unit:even"));
      CHECK(p.on_unit_circle == niho_root_count(f, 4, a));
      CHECK_THROWS_AS(root_field_profile(f, a), FieldError);
    }
  }
}

TEST_CASE("separable profiles against explicit splitting") {
  for (std::uint32_t n : {4u, 6u}) {
    auto f = Field::build(2, n);
    std::uint64_t separable = 0;
    for (Value a = 1; a < f->order(); ++a) {
      const auto g = key_polynomial(f, a);
      if (!is_squarefree(g)) continue;
      ++separable;
      const auto p = key_root_profile(f, a);
      INFO(f->descriptor() << " a=" << a << " " << p.case_tag);
      CHECK(p.separable);
      CHECK(p.in_theorem);
      CHECK(p.matches_case);
      CHECK(p.distinct_roots == 7);

      const auto split = splitting_roots(g);
      const Field& h = *split.host;
      std::set<Value> seen;
      std::vector<std::uint32_t> sig;
      std::array<std::uint32_t, 8> by_degree{};
      std::uint32_t z = 0;
      for (auto r : split.roots) {
        const auto o = pi_orbit(*f, h, r);
        ++by_degree[o.degree];
        if (o.size() == 1) ++z;
        if (seen.count(r)) continue;
        for (auto x : o.orbit) seen.insert(x);
        sig.push_back(static_cast<std::uint32_t>(o.size()));
      }
      std::sort(sig.begin(), sig.end());
      CHECK(sig == p.orbit_signature);
      CHECK(z == p.on_unit_circle);
      CHECK(by_degree == p.exact_degree);
      CHECK(p.orbit_count == sig.size());
      CHECK(p.orbit_count % 2 == 0);
    }
    CHECK(separable == f->order() - 1 - f->half_order() - 1);
  }
}

TEST_CASE("case exclusion over GF(256)") {
  auto f = Field::build(2, 8);
  for (Value a = 1; a < f->order(); ++a) {
    const auto p = key_root_profile(f, a);
    if (!p.separable) continue;
    CHECK(p.matches_case);
    CHECK(p.on_unit_circle != 4);
    CHECK(p.on_unit_circle != 6);
    CHECK(p.on_unit_circle != 7);
    CHECK(p.orbit_count % 2 == 0);
  }
}

TEST_CASE("a = 0 is profiled but marked outside the theorem") {
  auto f = Field::build(2, 4);
  const auto p = key_root_profile(f, 0);
  CHECK_FALSE(p.in_theorem);
  CHECK(p.to_json()["in_theorem"] == false);
}

TEST_CASE("square roots") {
  auto f = Field::build(2, 8);
  for (Value x = 0; x < f->order(); ++x) CHECK(f->sqr(square_root(*f, x)) == x);
}

TEST_CASE("profile preconditions") {
  CHECK_THROWS_AS(key_root_profile(Field::build(2, 5), 1), FieldError);
  CHECK_THROWS_AS(key_root_profile(Field::build(3, 2), 1), FieldError);
  CHECK_THROWS_AS(classify_inseparable(Field::build(2, 4), Field::build(2, 4)->exp(1)), FieldError);
}
