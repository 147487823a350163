#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gen.hpp"
#include "niho/factor.hpp"
#include "niho/keypoly.hpp"
#include "niho/orbits.hpp"
#include "niho/symfun.hpp"

using namespace niho;

namespace {

struct Tower {
  FieldPtr base;
  FieldPtr host;
  std::uint32_t ext;
};

std::vector<Tower> towers() {
  std::vector<Tower> out;
  for (std::uint32_t n : {4u, 6u}) {
    auto base = Field::build(2, n);
    for (std::uint32_t e = 1; e <= 5; ++e) out.push_back({base, extension_of_degree(base, e), e});
  }
  return out;
}

// Exact degree of r over base, from the Frobenius fixed field.
std::uint32_t degree_over(const Tower& t, Value r) {
  std::uint32_t e = 1;
  while (t.host->frobenius(r, std::uint64_t{t.base->degree()} * e) != r) ++e;
  return e;
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

// Pair sum over a set, straight from the definition, independent of closed_set_sum.
Value pair_sum(const Field& h, const std::vector<Value>& set) {
  Value s = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Value d = h.add(set[i], set[j]);
      s = h.add(s, h.div(h.mul(set[i], set[j]), h.mul(d, d)));
    }
  }
  return s;
}

}  // namespace

TEST_CASE("a unit-circle element has a singleton orbit") {
  auto f = Field::build(2, 4);
  for (auto u : f->unit_circle()) {
    const auto o = pi_orbit(*f, *f, u);
    CHECK(o.size() == 1);
    CHECK(o.on_unit_circle);
  }
  const auto o = pi_orbit(*f, *f, f->exp(1));
  CHECK(o.size() == 2);
  CHECK(o.degree == 1);
}

TEST_CASE("orbit sizes follow the degree and circle criterion") {
  const auto ts = towers();
  auto rng = gen::stream(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = ts[gen::below(ts.size(), rng)];
    const Value r = gen::nonzero(*t.host, rng);
    const auto e = degree_over(t, r);
    const bool circle =
        e % 2 == 1 && t.host->mul(r, t.host->frobenius(r, std::uint64_t{t.base->degree() / 2} * e)) == 1;
    const auto o = pi_orbit(*t.base, *t.host, r);
    INFO(t.host->descriptor() << " over " << t.base->descriptor() << " r=" << r << " trial " << trial);
    CHECK(o.degree == e);
    CHECK(o.size() == (circle ? e : 2 * e));
    CHECK(o.on_unit_circle == circle);
    CHECK(std::set<Value>(o.orbit.begin(), o.orbit.end()).size() == o.size());
    // Every orbit member has the same degree.
    for (auto x : o.orbit) CHECK(degree_over(t, x) == e);
  }
}

TEST_CASE("closed-set trace formula") {
  const auto ts = towers();
  auto rng = gen::stream(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = ts[gen::below(ts.size(), rng)];
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(gen::below(3, rng));
    std::vector<Value> set;
    std::uint32_t orbits = 0;
    for (int tries = 0; orbits < k && tries < 20; ++tries) {
      const auto o = pi_orbit(*t.base, *t.host, gen::nonzero(*t.host, rng)).orbit;
      if (std::find(set.begin(), set.end(), o.front()) != set.end()) continue;
      set.insert(set.end(), o.begin(), o.end());
      ++orbits;
    }
    const auto r = closed_set_sum(*t.base, *t.host, set);
    INFO(t.host->descriptor() << " |R|=" << set.size() << " t=" << orbits << " trial " << trial);
    CHECK(r.orbit_count == orbits);
    CHECK(r.s == pair_sum(*t.host, set));
    CHECK(r.tau_fixed);
    const std::uint64_t n = set.size();
    const std::uint32_t expect = orbits == 1 ? choose2(n - 1) % 2 : (choose2(n + 1) + orbits) % 2;
    CHECK(r.trace == expect);
    CHECK(r.formula_holds());
  }
}

TEST_CASE("cross-orbit trace formula") {
  const auto ts = towers();
  auto rng = gen::stream(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = ts[gen::below(ts.size(), rng)];
    const auto o1 = pi_orbit(*t.base, *t.host, gen::nonzero(*t.host, rng)).orbit;
    std::vector<Value> o2;
    while (o2.empty()) {
      auto c = pi_orbit(*t.base, *t.host, gen::nonzero(*t.host, rng)).orbit;
      if (std::find(o1.begin(), o1.end(), c.front()) == o1.end()) o2 = c;
    }
    const auto r = cross_orbit_sum(*t.base, *t.host, o1, o2);
    CHECK(r.trace == (o1.size() * o2.size()) % 2);
    CHECK(r.formula_holds());
    // Bilinearity: the full pair sum over o1 u o2 splits into the two internal sums plus the cross sum.
    std::vector<Value> all = o1;
    all.insert(all.end(), o2.begin(), o2.end());
    CHECK(pair_sum(*t.host, all) == t.host->add(t.host->add(pair_sum(*t.host, o1), pair_sum(*t.host, o2)), r.s));
  }
}

TEST_CASE("half-field trace lands in F_2") {
  auto base = Field::build(2, 6);
  auto rng = gen::stream(44);
  for (int trial = 0; trial < 200; ++trial) {
    const Value x = gen::element(*base, rng);
    const Value s = base->add(x, base->tau(x));  // in H_F
    CHECK(half_field_trace(*base, *base, s) == base->trace(x) % 2);
  }
}

TEST_CASE("orbit preconditions") {
  auto f = Field::build(2, 4);
  auto odd = Field::build(2, 5);
  CHECK_THROWS_AS(pi_orbit(*f, *f, 0), FieldError);
  CHECK_THROWS_AS(pi_orbit(*odd, *odd, 1), FieldError);
  CHECK_THROWS_AS(pi_orbit(*f, *Field::build(2, 4), 1), FieldError);
  // alpha alone is not closed: its partner alpha^{-4} is missing.
  CHECK_THROWS_AS(closed_set_sum(*f, *f, {f->exp(1)}), FieldError);
  CHECK_THROWS_AS(closed_set_sum(*f, *f, {1, 1}), FieldError);
  const auto o = pi_orbit(*f, *f, f->exp(1)).orbit;
  CHECK_THROWS_AS(cross_orbit_sum(*f, *f, o, o), FieldError);
}

TEST_CASE("splitting roots") {
  auto f = Field::build(2, 4);
  auto rng = gen::stream(45);
  int done = 0;
  while (done < 30) {
    const auto g = gen::monic(f, 2 + static_cast<int>(gen::below(5, rng)), rng);
    if (!is_squarefree(g)) continue;
    const auto s = splitting_roots(g);
    CHECK(s.roots.size() == static_cast<std::size_t>(g.degree()));
    const auto ge = embed_poly(g, s.host);
    for (auto r : s.roots) CHECK(ge.eval(r) == 0);
    ++done;
  }
  CHECK_THROWS_AS(splitting_roots(Poly(f, {1, 0, 1})), FieldError);
}

TEST_CASE("pair sum vanishes for separable a over GF(16) and GF(64)") {
  for (std::uint32_t n : {4u, 6u}) {
    auto f = Field::build(2, n);
    std::uint64_t count = 0;
    for (Value a = 1; a < f->order(); ++a) {
      const auto g = key_polynomial(f, a);
      if (!is_squarefree(g)) continue;
      std::uint64_t l = 1;
      for (const auto& h : irreducible_factors(g)) l = std::lcm(l, static_cast<std::uint64_t>(h.degree()));
      if (l * n > 63) continue;  // host would not fit in 64-bit values
      const auto r = key_pair_sum_check(f, a);
      INFO(f->descriptor() << " a=" << a);
      CHECK(r.s_is_zero());
      CHECK(r.identity_holds);
      CHECK(r.b != 0);
      CHECK(r.c_direct == 0);
      CHECK(r.orbit_count % 2 == 0);
      ++count;
    }
    if (n == 4) CHECK(count == 10);
  }
}

TEST_CASE("pair sum need not vanish away from key polynomials") {
  // A single size-2 orbit {r, pi(r)} with r in F \ U: S = r pi(r) / (r + pi(r))^2, nonzero.
  auto f = Field::build(2, 4);
  const Value r = f->exp(1);
  const auto o = pi_orbit(*f, *f, r).orbit;
  const auto s = closed_set_sum(*f, *f, o);
  CHECK(s.s != 0);
  CHECK(s.formula_holds());
}
