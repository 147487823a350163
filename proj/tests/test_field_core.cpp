#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "niho/factor.hpp"
#include "niho/field.hpp"
#include "niho/numtheory.hpp"
#include "niho/poly.hpp"
#include "oracle.hpp"

using namespace niho;

namespace {

oracle::PolyField ref_of(const Field& f) { return {f.characteristic(), f.degree(), f.modulus()}; }

oracle::PolyField::Elem as_ref(const Field& f, Value v) { return f.coefficients(v); }

struct Shape {
  std::uint32_t p, n;
};

const Shape kShapes[] = {{2, 1}, {2, 2}, {2, 4}, {2, 8}, {2, 13}, {2, 16}, {2, 24}, {2, 40}, {2, 63},
                         {3, 1}, {3, 2}, {3, 5}, {5, 3}, {7, 2}, {11, 1}, {13, 4}};

}  // namespace

TEST_CASE("default modulus is the smallest primitive one") {
  for (auto [p, n] : {Shape{2, 2}, Shape{2, 3}, Shape{2, 4}, Shape{2, 6}, Shape{2, 8}, Shape{3, 2}, Shape{3, 3},
                      Shape{5, 2}, Shape{7, 2}}) {
    auto f = Field::build(p, n);
    CHECK_MESSAGE(f->modulus() == oracle::smallest_primitive_modulus(p, n), f->descriptor());
    CHECK(f->modulus_is_primitive());
  }
  CHECK(Field::build(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(Field::build(3, 2)->modulus() == std::vector<std::uint32_t>{2, 1, 1});
}

TEST_CASE("arithmetic agrees with schoolbook reference") {
  auto rng = gen::stream(11);
  for (auto [p, n] : kShapes) {
    auto f = Field::build(p, n);
    const auto ref = ref_of(*f);
    for (int t = 0; t < 1000; ++t) {
      const Value a = gen::element(*f, rng), b = gen::element(*f, rng);
      INFO(f->descriptor() << " a=" << a << " b=" << b << " trial " << t);
      REQUIRE(f->contains(a));
      CHECK(as_ref(*f, f->mul(a, b)) == ref.mul(as_ref(*f, a), as_ref(*f, b)));
      CHECK(as_ref(*f, f->add(a, b)) == ref.add(as_ref(*f, a), as_ref(*f, b)));
      CHECK(f->sub(f->add(a, b), b) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  auto rng = gen::stream(12);
  for (auto [p, n] : kShapes) {
    auto f = Field::build(p, n);
    for (int t = 0; t < 1000; ++t) {
      const Value a = gen::element(*f, rng), b = gen::element(*f, rng), c = gen::element(*f, rng);
      INFO(f->descriptor() << " trial " << t);
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->mul(a, 1) == a);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->div(f->mul(a, b), a) == b);
        CHECK(f->pow(a, f->order() - 1) == 1);
      }
      CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
      CHECK(f->frobenius(a, n) == a);
      CHECK(f->trace(a) < p);
      CHECK(f->trace(f->add(a, b)) == (f->trace(a) + f->trace(b)) % p);
    }
  }
}

TEST_CASE("trace matches the sum of conjugates") {
  auto rng = gen::stream(13);
  for (auto [p, n] : {Shape{2, 8}, Shape{3, 5}, Shape{5, 3}, Shape{2, 16}}) {
    auto f = Field::build(p, n);
    const auto ref = ref_of(*f);
    for (int t = 0; t < 200; ++t) {
      const Value a = gen::element(*f, rng);
      CHECK(f->trace(a) == ref.trace(as_ref(*f, a)));
    }
  }
}

TEST_CASE("log tables and polynomial basis give the same products") {
  auto rng = gen::stream(14);
  for (auto [p, n] : {Shape{2, 16}, Shape{3, 7}, Shape{2, 10}}) {
    auto tab = Field::build(p, n);
    auto poly = Field::build(p, n, std::nullopt, FieldOptions{.table_cutoff = 0});
    REQUIRE(tab->representation() == Representation::kLogTables);
    REQUIRE(poly->representation() == Representation::kPolynomialBasis);
    for (int t = 0; t < 1000; ++t) {
      const Value a = gen::element(*tab, rng), b = gen::element(*tab, rng);
      CHECK(tab->mul(a, b) == poly->mul(a, b));
      if (a) CHECK(tab->inv(a) == poly->inv(a));
    }
  }
}

TEST_CASE("half field, tau, pi and the unit circle") {
  auto rng = gen::stream(15);
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 12u}) {
    auto f = Field::build(2, n);
    const std::uint64_t q = f->half_order();
    const auto u = f->unit_circle();
    CHECK(u.size() == q + 1);
    CHECK(std::set<Value>(u.begin(), u.end()).size() == u.size());
    for (auto x : u) {
      CHECK(f->on_unit_circle(x));
      CHECK(f->pi(x) == x);
    }
    for (int t = 0; t < 500; ++t) {
      const Value a = gen::nonzero(*f, rng);
      CHECK(f->tau(f->tau(a)) == a);
      CHECK(f->tau(a) == f->pow(a, q));
      CHECK(f->pi(a) == f->inv(f->pow(a, q)));
      CHECK((f->pi(a) == a) == f->on_unit_circle(a));
      CHECK(f->relative_trace(a, n / 2) == f->add(a, f->tau(a)));
    }
  }
  CHECK_THROWS_AS(Field::build(2, 5)->half_order(), FieldError);
}

TEST_CASE("element orders") {
  auto f = Field::build(2, 8);
  CHECK(f->element_order(f->primitive()) == 255);
  CHECK(f->element_order(1) == 1);
  auto rng = gen::stream(16);
  for (int t = 0; t < 200; ++t) {
    const Value a = gen::nonzero(*f, rng);
    const auto o = f->element_order(a);
    CHECK(255 % o == 0);
    CHECK(f->pow(a, o) == 1);
    for (auto r : nt::prime_factors(o)) CHECK(f->pow(a, o / r) != 1);
  }
}

TEST_CASE("bad constructions are rejected") {
  CHECK_THROWS_AS(Field::build(4, 2), FieldError);
  CHECK_THROWS_AS(Field::build(2, 0), FieldError);
  CHECK_THROWS_AS(Field::build(2, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1}), FieldError);  // (x^2+x+1)^2
  CHECK_THROWS_AS(Field::build(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 1}), FieldError);
  CHECK_THROWS_AS(Field::build(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);
  CHECK_THROWS_AS(Field::build(2, 2, std::vector<std::uint32_t>{1, 2, 1}), FieldError);
  CHECK_THROWS_AS(Field::build(2, 65), FieldError);
  CHECK_NOTHROW(Field::build(2, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1}));
}

TEST_CASE("tagged elements refuse to mix fields") {
  auto a = Field::build(2, 4);
  auto b = Field::build(2, 4);
  const auto x = a->elem(3);
  const auto y = b->elem(3);
  CHECK(a->mul(x, a->one()) == x);
  CHECK_THROWS_AS(a->mul(x, y), FieldError);
  CHECK_THROWS_AS(a->elem(16), FieldError);
}

TEST_CASE("extension towers embed homomorphically") {
  auto rng = gen::stream(17);
  for (auto [n, e] : {std::pair{4u, 2u}, std::pair{4u, 3u}, std::pair{6u, 5u}, std::pair{2u, 7u}, std::pair{4u, 5u}}) {
    auto base = Field::build(2, n);
    auto ext = extension_of_degree(base, e);
    REQUIRE(ext->degree() == n * e);
    REQUIRE(ext->extends(*base));
    CHECK(ext->degree_over(*base) == e);
    for (int t = 0; t < 300; ++t) {
      const Value a = gen::element(*base, rng), b = gen::element(*base, rng);
      const Value ea = embed(*base, *ext, a), eb = embed(*base, *ext, b);
      CHECK(embed(*base, *ext, base->mul(a, b)) == ext->mul(ea, eb));
      CHECK(embed(*base, *ext, base->add(a, b)) == ext->add(ea, eb));
      // Image lies in the copy of the base: fixed by the |base|-power map.
      CHECK(ext->frobenius(ea, n) == ea);
    }
  }
  auto base = Field::build(3, 2);
  CHECK(extension_of_degree(base, 1) == base);
  CHECK_THROWS_AS(extension_of_degree(Field::build(2, 8), 8), FieldError);
}

TEST_CASE("build_extension exposes a root of the defining polynomial") {
  auto base = Field::build(2, 4);
  auto rng = gen::stream(18);
  int built = 0;
  for (int t = 0; t < 200 && built < 10; ++t) {
    const auto f = gen::monic(base, 3, rng);
    if (!is_irreducible(f)) continue;
    auto ext = build_extension(base, f);
    ++built;
    REQUIRE(ext->designated_root());
    CHECK(embed_poly(f, ext).eval(*ext->designated_root()) == 0);
  }
  CHECK(built == 10);
  CHECK_THROWS_AS(build_extension(base, Poly(base, {1, 0, 1})), FieldError);  // (x+1)^2
  CHECK_THROWS_AS(build_extension(base, Poly(base, {1, 1})), FieldError);
}

TEST_CASE("polynomial division and gcd") {
  auto rng = gen::stream(19);
  for (auto [p, n] : {Shape{2, 4}, Shape{3, 2}, Shape{2, 16}, Shape{5, 1}}) {
    auto f = Field::build(p, n);
    for (int t = 0; t < 200; ++t) {
      const auto a = gen::poly(f, static_cast<int>(gen::below(12, rng)), rng);
      const auto b = gen::poly(f, static_cast<int>(gen::below(6, rng)), rng);
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      const auto h = gen::monic(f, 1 + static_cast<int>(gen::below(3, rng)), rng);
      const auto g = poly_gcd(a * h, b * h);
      CHECK((g % h).is_zero());
      CHECK(((a * h) % g).is_zero());
      CHECK(g.leading() == 1);
    }
    CHECK_THROWS(divmod(Poly::x(f), Poly(f)));
  }
}

TEST_CASE("roots and factors against enumeration") {
  auto rng = gen::stream(20);
  for (auto [p, n] : {Shape{2, 4}, Shape{3, 3}, Shape{5, 2}, Shape{2, 6}}) {
    auto f = Field::build(p, n);
    for (int t = 0; t < 100; ++t) {
      const auto g = gen::monic(f, 1 + static_cast<int>(gen::below(7, rng)), rng);
      std::vector<Value> brute;
      for (Value x = 0; x < f->order(); ++x) {
        if (g.eval(x) == 0) brute.push_back(x);
      }
      INFO(f->descriptor() << " trial " << t);
      CHECK(roots_in_field(g) == brute);
      CHECK(distinct_roots_in_extension(g, 1) == static_cast<int>(brute.size()));
      if (!is_squarefree(g)) {
        CHECK(poly_gcd(g, g.derivative()).degree() > 0);
        continue;
      }
      const auto fac = irreducible_factors(g);
      Poly prod = Poly::constant(f, 1);
      for (const auto& h : fac) {
        CHECK(is_irreducible(h));
        prod = prod * h;
      }
      CHECK(prod == g);
      CHECK(std::count_if(fac.begin(), fac.end(), [](const Poly& h) { return h.degree() == 1; }) ==
            static_cast<long>(brute.size()));
      // Small degrees: irreducible iff no roots.
      if (g.degree() >= 2 && g.degree() <= 3) CHECK(is_irreducible(g) == brute.empty());
    }
  }
  CHECK_FALSE(is_squarefree(Poly(Field::build(2, 4), {1, 0, 1})));
}

TEST_CASE("equal-degree split reports its seed after exhausting retries") {
  auto f = Field::build(3, 2);
  const auto g = Poly(f, {1, 0, 1}) * Poly(f, {2, 1, 1});
  std::mt19937_64 rng(1);
  SplitOptions opt;
  opt.retry_budget = 0;
  CHECK_THROWS_AS(equal_degree_split(g, 2, rng, opt), FieldError);
}

TEST_CASE("number theory helpers") {
  CHECK(nt::gcd(12, 18) == 6);
  CHECK(nt::lcm(4, 6) == 12);
  CHECK(nt::powmod(3, 200, 1000003) == nt::mulmod(nt::powmod(3, 100, 1000003), nt::powmod(3, 100, 1000003), 1000003));
  CHECK(nt::checked_pow(2, 63) == std::optional<std::uint64_t>{std::uint64_t{1} << 63});
  CHECK_FALSE(nt::checked_pow(2, 64).has_value());
  CHECK(nt::prime_factors(255) == std::vector<std::uint64_t>{3, 5, 17});
  CHECK(nt::is_prime(8191));
  CHECK_FALSE(nt::is_prime(8193));
  CHECK(nt::prime_factors((std::uint64_t{1} << 62) - 1).size() > 1);
}
