#include "niho/kernels.hpp"

#include <bit>
#include <string>

namespace niho::kernels {

namespace {

void require_binary(const Field& f) {
  if (f.characteristic() != 2) throw FieldError("walsh kernel needs characteristic 2, got " + f.descriptor());
}

bool bit(const std::vector<std::uint64_t>& w, std::uint64_t i) { return (w[i >> 6] >> (i & 63)) & 1; }

// 64 bits of the cyclic sequence starting at position `start`.
std::uint64_t window(const std::vector<std::uint64_t>& doubled, std::uint64_t start) {
  const std::uint64_t q = start >> 6, r = start & 63;
  if (r == 0) return doubled[q];
  return (doubled[q] >> r) | (doubled[q + 1] << (64 - r));
}

}  // namespace

std::vector<std::int64_t> walsh_values_serial(const Field& f, std::uint64_t d) {
  require_binary(f);
  const std::uint64_t q = f.order();
  std::vector<std::uint32_t> td(q);
  for (Value x = 0; x < q; ++x) td[x] = f.trace(f.pow(x, d));
  std::vector<std::int64_t> out(q);
  for (Value a = 0; a < q; ++a) {
    std::int64_t s = 0;
    for (Value x = 0; x < q; ++x) s += ((td[x] + f.trace(f.mul(a, x))) & 1) ? -1 : 1;
    out[a] = s;
  }
  return out;
}

std::vector<std::int64_t> walsh_values_parallel(const Field& f, std::uint64_t d) {
  require_binary(f);
  const std::uint64_t q = f.order();
  const std::uint32_t n = f.degree();
  const std::uint64_t words = (q + 63) / 64;
  const std::uint64_t tail = q < 64 ? (std::uint64_t{1} << q) - 1 : ~std::uint64_t{0};

  std::vector<std::uint64_t> td(words, 0);
  for (Value x = 0; x < q; ++x) {
    if (f.trace(f.pow(x, d))) td[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  // Bit i of x -> x.m parity pattern within one word, for each low-6-bit mask.
  const std::uint32_t low_bits = n < 6 ? n : 6;
  std::vector<std::uint64_t> pattern(std::uint64_t{1} << low_bits, 0);
  for (std::uint64_t m = 0; m < pattern.size(); ++m) {
    for (std::uint64_t i = 0; i < 64 && i < q; ++i) {
      if (std::popcount(i & m) & 1) pattern[m] |= std::uint64_t{1} << i;
    }
  }

  std::vector<std::int64_t> out(q);
  const auto total = static_cast<std::int64_t>(q);
#pragma omp parallel for schedule(static)
  for (std::int64_t ai = 0; ai < total; ++ai) {
    const Value a = static_cast<Value>(ai);
    std::uint64_t mask = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (f.trace(f.mul(a, Value{1} << i))) mask |= std::uint64_t{1} << i;
    }
    const std::uint64_t pat = pattern[mask & (pattern.size() - 1)];
    const std::uint64_t high = mask >> 6;
    std::int64_t ones = 0;
    for (std::uint64_t j = 0; j < words; ++j) {
      const std::uint64_t flip = (std::popcount(j & high) & 1) ? ~std::uint64_t{0} : 0;
      ones += std::popcount((td[j] ^ pat ^ flip) & tail);
    }
    out[a] = total - 2 * ones;
  }
  return out;
}

std::vector<std::int64_t> crosscorrelation_serial(const std::vector<std::uint64_t>& u,
                                                  const std::vector<std::uint64_t>& v, std::uint64_t n) {
  std::vector<std::int64_t> out(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::int64_t s = 0;
    for (std::uint64_t t = 0; t < n; ++t) s += (bit(u, (t + k) % n) != bit(v, t)) ? -1 : 1;
    out[k] = s;
  }
  return out;
}

std::vector<std::int64_t> crosscorrelation_parallel(const std::vector<std::uint64_t>& u,
                                                    const std::vector<std::uint64_t>& v, std::uint64_t n) {
  // u written out twice (plus a spare word) so every shifted window is contiguous.
  std::vector<std::uint64_t> doubled((2 * n + 127) / 64 + 1, 0);
  for (std::uint64_t i = 0; i < 2 * n; ++i) {
    if (bit(u, i % n)) doubled[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  const std::uint64_t words = (n + 63) / 64;
  const std::uint64_t rem = n & 63;
  const std::uint64_t last = rem ? (std::uint64_t{1} << rem) - 1 : ~std::uint64_t{0};

  std::vector<std::int64_t> out(n);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < total; ++k) {
    std::int64_t diff = 0;
    for (std::uint64_t j = 0; j < words; ++j) {
      std::uint64_t x = window(doubled, static_cast<std::uint64_t>(k) + 64 * j) ^ v[j];
      if (j + 1 == words) x &= last;
      diff += std::popcount(x);
    }
    out[k] = total - 2 * diff;
  }
  return out;
}

}  // namespace niho::kernels
