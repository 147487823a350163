#include <doctest.h>

#include <map>
#include <numeric>

#include "gen.hpp"
#include "niho/kernels.hpp"
#include "niho/keypoly.hpp"
#include "niho/numtheory.hpp"
#include "niho/weil.hpp"
#include "oracle.hpp"

using namespace niho;

namespace {

std::map<std::int64_t, std::uint64_t> histogram(const std::vector<std::int64_t>& w) {
  std::map<std::int64_t, std::uint64_t> h;
  for (std::size_t a = 1; a < w.size(); ++a) ++h[w[a]];
  return h;
}

// Sum over a in F* of W(a) and of W(a)^2, for the moment identities.
std::pair<__int128, __int128> moments(const SpectrumReport& r) {
  __int128 s1 = r.at_zero, s2 = static_cast<__int128>(r.at_zero) * r.at_zero;
  for (const auto& [v, c] : r.spectrum) {
    s1 += static_cast<__int128>(v) * c;
    s2 += static_cast<__int128>(v) * v * c;
  }
  return {s1, s2};
}

std::uint64_t random_invertible(std::uint64_t q, std::mt19937_64& rng) {
  while (true) {
    const std::uint64_t d = 1 + gen::below(q - 2, rng);
    if (nt::gcd(d, q - 1) == 1) return d;
  }
}

}  // namespace

TEST_CASE("GF(4), d = 5: Walsh values {0, 4} over F*") {
  auto f = Field::build(2, 2);
  const auto r = walsh_spectrum(*f, 5);
  CHECK(r.spectrum == std::map<std::int64_t, std::uint64_t>{{0, 2}, {4, 1}});
  CHECK(is_degenerate(*f, 5));
}

TEST_CASE("GF(16), d = 13 spectrum, frozen from the enumeration oracle") {
  auto f = Field::build(2, 4);
  const auto ref = oracle::walsh_all(oracle::gf2_from_modulus(f->modulus()), 13);
  const std::map<std::int64_t, std::uint64_t> frozen{{-4, 4}, {0, 5}, {4, 4}, {8, 2}};
  CHECK(histogram(ref) == frozen);
  CHECK(walsh_spectrum(*f, 13).spectrum == frozen);
  CHECK(walsh_values(*f, 13) == ref);
}

TEST_CASE("direct Walsh values agree with the naive oracle") {
  auto rng = gen::stream(21);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    auto f = Field::build(2, n);
    const auto g = oracle::gf2_from_modulus(f->modulus());
    for (int t = 0; t < (n <= 8 ? 10 : 3); ++t) {
      const auto d = random_invertible(f->order(), rng);
      INFO("GF(2^" << n << ") d=" << d);
      CHECK(walsh_values(*f, d) == oracle::walsh_all(g, d));
    }
  }
}

TEST_CASE("serial and parallel Walsh kernels agree") {
  auto rng = gen::stream(22);
  for (std::uint32_t n : {3u, 6u, 7u, 9u, 11u, 12u}) {
    auto f = Field::build(2, n);
    for (int t = 0; t < 3; ++t) {
      const auto d = random_invertible(f->order(), rng);
      CHECK(kernels::walsh_values_serial(*f, d) == kernels::walsh_values_parallel(*f, d));
    }
  }
}

TEST_CASE("moment identities hold on every spectrum") {
  auto rng = gen::stream(23);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    auto f = Field::build(2, n);
    const __int128 q = f->order();
    for (int t = 0; t < 5 && f->order() > 2; ++t) {
      const auto d = random_invertible(f->order(), rng);
      const auto r = walsh_spectrum(*f, d);
      const auto [s1, s2] = moments(r);
      CHECK(s1 == q);
      CHECK(s2 == q * q);
      CHECK(r.total() == f->order() - 1);
      CHECK(r.at_zero == 0);
    }
  }
}

TEST_CASE("GF(65536), d = 1021 by root counts, frozen and checked by moments and enumeration") {
  auto f = Field::build(2, 16);
  const auto r = walsh_spectrum_by_roots(f, 4);
  CHECK(r.d == 1021);
  CHECK(r.path == "root-count");
  const std::map<std::int64_t, std::uint64_t> frozen{
      {-256, 23920}, {0, 24539}, {256, 11056}, {512, 5480}, {1024, 540}};
  CHECK(r.spectrum == frozen);
  const auto [s1, s2] = moments(r);
  CHECK(s1 == 65536);
  CHECK(s2 == static_cast<__int128>(65536) * 65536);
  // The packed kernel can enumerate this field too once the cap is lifted.
  WeilOptions wide;
  wide.direct_cap = std::uint64_t{1} << 16;
  const auto w = walsh_values(*f, 1021, wide);
  CHECK(histogram(w) == frozen);
}

TEST_CASE("degenerate exponents give the autocorrelation spectrum") {
  for (std::uint32_t n : {3u, 4u, 7u}) {
    auto f = Field::build(2, n);
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::uint64_t d = std::uint64_t{1} << k;
      CHECK(is_degenerate(*f, d));
      const auto r = walsh_spectrum(*f, d);
      CHECK(r.spectrum.at(0) == f->order() - 2);
      CHECK(r.spectrum.at(static_cast<std::int64_t>(f->order())) == 1);
      const auto c = crosscorrelation_spectrum(*f, d);
      CHECK(c.spectrum.at(-1) == f->order() - 2);
      CHECK(c.spectrum.at(static_cast<std::int64_t>(f->order()) - 1) == 1);
    }
  }
  CHECK_FALSE(is_degenerate(*Field::build(2, 4), 7));
}

TEST_CASE("cyclotomic equivalents share a spectrum") {
  auto rng = gen::stream(24);
  for (std::uint32_t n : {5u, 6u, 8u}) {
    auto f = Field::build(2, n);
    for (int t = 0; t < 5; ++t) {
      const auto d = random_invertible(f->order(), rng);
      const auto e = (2 * d) % (f->order() - 1);
      CHECK(walsh_spectrum(*f, d).spectrum == walsh_spectrum(*f, e).spectrum);
    }
  }
}

TEST_CASE("crosscorrelation is the Walsh spectrum shifted by one") {
  auto f = Field::build(2, 6);
  const auto w = walsh_spectrum(*f, 29);
  const auto c = crosscorrelation_spectrum(*f, 29);
  CHECK(c.kind == "crosscorrelation");
  std::map<std::int64_t, std::uint64_t> shifted;
  for (const auto& [v, k] : w.spectrum) shifted[v - 1] = k;
  CHECK(c.spectrum == shifted);
  CHECK(shifted_to_crosscorrelation(w).spectrum == shifted);
}

TEST_CASE("GF(9), d = 5, a = 1 gives W = 3") {
  auto f = Field::build(3, 2);
  const auto w = weil_sum(*f, 5, Value{1});
  REQUIRE(w.value().has_value());
  CHECK(*w.value() == 3);
  CHECK(weil_sum(*f, 5, f->elem(1)).fiber_counts == w.fiber_counts);
}

TEST_CASE("odd-characteristic fiber counts agree with the oracle") {
  for (auto [p, n, d] : {std::tuple{3u, 2u, 5ull}, std::tuple{3u, 3u, 5ull}, std::tuple{5u, 2u, 5ull},
                         std::tuple{3u, 4u, 7ull}}) {
    auto f = Field::build(p, n);
    const oracle::PolyField ref{p, n, f->modulus()};
    if (nt::gcd(d, f->order() - 1) != 1) continue;
    for (Value a = 0; a < f->order(); ++a) {
      INFO(f->descriptor() << " d=" << d << " a=" << a);
      CHECK(weil_sum(*f, d, a).fiber_counts == oracle::fiber_counts(ref, d, a));
    }
  }
}

TEST_CASE("Niho exponents") {
  CHECK(niho_exponent(*Field::build(2, 2), 4).d == 5);
  CHECK(niho_exponent(*Field::build(2, 4), 4).d == 13);
  CHECK(niho_exponent(*Field::build(2, 6), 4).d == 29);
  CHECK(niho_exponent(*Field::build(2, 8), 4).d == 61);
  CHECK(niho_exponent(*Field::build(2, 10), 4).d == 125);
  CHECK(niho_exponent(*Field::build(2, 12), 4).d == 253);
  CHECK(niho_exponent(*Field::build(2, 16), 4).d == 1021);
  CHECK(niho_exponent(*Field::build(2, 4), 4).valid);
  // 2s - 1 = 5 shares a factor with Q + 1 = 5 over GF(16).
  CHECK_FALSE(niho_exponent(*Field::build(2, 4), 3).valid);
  CHECK_THROWS_AS(niho_exponent(*Field::build(2, 5), 4), FieldError);
}

TEST_CASE("nonlinearity and code weights") {
  auto f = Field::build(2, 6);
  const auto w = walsh_values(*f, 29);
  std::int64_t peak = 0;
  for (auto v : w) peak = std::max<std::int64_t>(peak, v < 0 ? -v : v);
  CHECK(nonlinearity(*f, 29) == 32 - static_cast<std::uint64_t>(peak) / 2);
  CHECK(nonlinearity(walsh_spectrum(*f, 29), f->order()) == nonlinearity(*f, 29));

  for (std::uint32_t n : {4u, 5u, 6u, 8u}) {
    auto g = Field::build(2, n);
    const std::uint64_t d = n == 4 ? 13 : (n == 5 ? 7 : (n == 6 ? 29 : 61));
    const auto wt = cyclic_code_weights(*g, d);
    std::uint64_t codewords = 0;
    for (const auto& [weight, count] : wt) {
      codewords += count;
      CHECK(weight <= g->order() - 1);
    }
    CHECK(codewords == g->order() * g->order());
    CHECK(wt.at(0) == 1);
    if (n > 6) continue;
    // Codeword (Tr(a x^d + b x))_{x in F*}, weights by brute force.
    const auto og = oracle::gf2_from_modulus(g->modulus());
    std::vector<Value> xd(g->order());
    for (Value x = 0; x < g->order(); ++x) xd[x] = og.pow(x, d);
    std::map<std::uint64_t, std::uint64_t> brute;
    for (Value a = 0; a < g->order(); ++a) {
      for (Value b = 0; b < g->order(); ++b) {
        std::uint64_t weight = 0;
        for (Value x = 1; x < g->order(); ++x) weight += og.trace(og.mul(a, xd[x]) ^ og.mul(b, x));
        ++brute[weight];
      }
    }
    CHECK(wt == brute);
  }
}

TEST_CASE("exponent and size preconditions") {
  auto f = Field::build(2, 4);
  CHECK_THROWS(require_invertible_exponent(*f, 3));
  CHECK_THROWS(walsh_values(*f, 5));
  WeilOptions tiny;
  tiny.direct_cap = 8;
  CHECK_THROWS(walsh_values(*f, 13, tiny));
  CHECK_THROWS(walsh_values(*Field::build(3, 2), 5));
}

TEST_CASE("report serialization") {
  auto f = Field::build(2, 4);
  const auto r = walsh_spectrum(*f, 13);
  const auto j = r.to_json();
  CHECK(j["field"] == "2^4");
  CHECK(j["d"] == 13);
  CHECK(j["spectrum"].size() == 4);
  CHECK(j["normalized"][0]["denominator"] == 4);
  CHECK(r.to_csv() == "value,count\n-4,4\n0,5\n4,4\n8,2\n");
}
