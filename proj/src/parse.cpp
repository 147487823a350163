#include "niho/parse.hpp"

#include <charconv>

#include "niho/numtheory.hpp"

namespace niho {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text, std::string_view what) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_u64(part, what));
  return out;
}

FieldDescriptor parse_field_descriptor(std::string_view text) {
  text = trim(text);
  if (text.starts_with("GF(") && text.ends_with(")")) text = text.substr(3, text.size() - 4);
  FieldDescriptor d;
  const auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    const auto p = parse_u64(text.substr(0, caret), "field characteristic");
    const auto n = parse_u64(text.substr(caret + 1), "field degree");
    if (p > 0xFFFFFFFFu || n == 0 || n > 64) throw UsageError("field out of range: " + std::string(text));
    d.p = static_cast<std::uint32_t>(p);
    d.n = static_cast<std::uint32_t>(n);
  } else {
    const auto q = parse_u64(text, "field order");
    const auto primes = q > 1 ? nt::prime_factors(q) : std::vector<std::uint64_t>{};
    if (primes.size() != 1) throw UsageError("field order is not a prime power: " + std::string(text));
    d.p = static_cast<std::uint32_t>(primes[0]);
    d.n = 0;
    for (std::uint64_t r = q; r > 1; r /= primes[0]) ++d.n;
  }
  if (!nt::is_prime(d.p)) throw UsageError("characteristic " + std::to_string(d.p) + " is not prime");
  if (!nt::checked_pow(d.p, d.n)) throw UsageError("field order overflows 64 bits: " + std::string(text));
  return d;
}

std::vector<std::uint32_t> parse_coefficients(std::string_view text) {
  std::vector<std::uint32_t> out;
  for (auto part : split(text, ',')) {
    const auto v = parse_u64(part, "coefficient");
    if (v > 0xFFFFFFFFu) throw UsageError("coefficient out of range");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

FieldPtr field_from_text(std::string_view descriptor, std::string_view modulus, FieldOptions options) {
  const auto d = parse_field_descriptor(descriptor);
  std::optional<std::vector<std::uint32_t>> m;
  if (!trim(modulus).empty()) m = parse_coefficients(modulus);
  return Field::build(d.p, d.n, m, options);
}

Value parse_element(const Field& f, std::string_view text) {
  text = trim(text);
  if (const auto eq = text.find('='); eq != std::string_view::npos) text = trim(text.substr(eq + 1));
  if (text.starts_with("alpha")) {
    auto rest = trim(text.substr(5));
    if (rest.empty()) return f.primitive();
    if (rest.front() != '^') throw UsageError("bad element: '" + std::string(text) + "'");
    return f.exp(parse_u64(rest.substr(1), "exponent") % (f.order() - 1));
  }
  const auto coeffs = parse_coefficients(text);
  if (coeffs.size() > f.degree()) throw UsageError("element has more coefficients than the field degree");
  for (auto c : coeffs) {
    if (c >= f.characteristic()) throw UsageError("coefficient " + std::to_string(c) + " is not below p");
  }
  return f.from_coefficients(coeffs);
}

std::string render_element(const Field& f, Value v) {
  if (v == 0) return "0";
  if (f.order() > (std::uint64_t{1} << 20)) {
    std::string out;
    for (auto c : f.coefficients(v)) out += (out.empty() ? "" : ",") + std::to_string(c);
    return out;
  }
  Value x = 1;
  for (std::uint64_t k = 0; k + 1 < f.order(); ++k) {
    if (x == v) return "alpha^" + std::to_string(k);
    x = f.mul(x, f.primitive());
  }
  throw FieldError("element outside the multiplicative group");
}

}  // namespace niho
