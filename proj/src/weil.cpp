#include "niho/weil.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "niho/kernels.hpp"
#include "niho/numtheory.hpp"

namespace niho {

std::optional<std::int64_t> CharacterSumValue::value() const {
  if (fiber_counts.size() < 2) return std::nullopt;
  for (std::size_t j = 2; j < fiber_counts.size(); ++j) {
    if (fiber_counts[j] != fiber_counts[1]) return std::nullopt;
  }
  return static_cast<std::int64_t>(fiber_counts[0]) - static_cast<std::int64_t>(fiber_counts[1]);
}

std::uint64_t SpectrumReport::total() const {
  std::uint64_t t = 0;
  for (const auto& [v, c] : spectrum) t += c;
  return t;
}

nlohmann::ordered_json SpectrumReport::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["d"] = d;
  j["kind"] = kind;
  j["path"] = path;
  j["spectrum"] = nlohmann::ordered_json::array();
  for (const auto& [v, c] : spectrum) j["spectrum"].push_back({{"value", v}, {"count", c}});
  j["at_zero"] = at_zero;
  if (sqrt_order) {
    j["normalized"] = nlohmann::ordered_json::array();
    for (const auto& [v, c] : spectrum) {
      j["normalized"].push_back({{"numerator", v}, {"denominator", *sqrt_order}, {"count", c}});
    }
  }
  return j;
}

std::string SpectrumReport::to_csv() const {
  std::ostringstream os;
  os << "value,count\n";
  for (const auto& [v, c] : spectrum) os << v << ',' << c << '\n';
  return os.str();
}

void require_invertible_exponent(const Field& f, std::uint64_t d) {
  if (d == 0 || nt::gcd(d, f.order() - 1) != 1) {
    throw FieldError("exponent " + std::to_string(d) + " is not coprime to |F|-1 = " +
                     std::to_string(f.order() - 1));
  }
}

CharacterSumValue weil_sum(const Field& f, std::uint64_t d, Value a) {
  require_invertible_exponent(f, d);
  if (!f.contains(a)) throw FieldError("value out of range for " + f.descriptor());
  CharacterSumValue out;
  out.fiber_counts.assign(f.characteristic(), 0);
  for (Value x = 0; x < f.order(); ++x) {
    ++out.fiber_counts[f.trace(f.sub(f.pow(x, d), f.mul(a, x)))];
  }
  return out;
}

CharacterSumValue weil_sum(const Field& f, std::uint64_t d, const FieldElem& a) {
  return weil_sum(f, d, f.value_of(a));
}

std::vector<std::int64_t> walsh_values(const Field& f, std::uint64_t d, const WeilOptions& options) {
  require_invertible_exponent(f, d);
  if (f.characteristic() != 2) {
    throw FieldError("walsh spectrum is characteristic 2 only; use weil_sum for " + f.descriptor());
  }
  if (f.order() > options.direct_cap) {
    throw FieldError("|F| = " + std::to_string(f.order()) + " exceeds the direct cap " +
                     std::to_string(options.direct_cap) + "; use the root-count path");
  }
  return options.parallel ? kernels::walsh_values_parallel(f, d) : kernels::walsh_values_serial(f, d);
}

SpectrumReport walsh_spectrum(const Field& f, std::uint64_t d, const WeilOptions& options) {
  const auto w = walsh_values(f, d, options);
  SpectrumReport r;
  r.field = f.descriptor();
  r.d = d;
  r.kind = "walsh";
  r.path = "direct";
  r.at_zero = w[0];
  for (std::size_t a = 1; a < w.size(); ++a) ++r.spectrum[w[a]];
  if (f.even_degree()) r.sqrt_order = f.half_order();
  return r;
}

SpectrumReport shifted_to_crosscorrelation(const SpectrumReport& walsh) {
  SpectrumReport r = walsh;
  r.kind = "crosscorrelation";
  r.spectrum.clear();
  r.at_zero = walsh.at_zero - 1;
  for (const auto& [v, c] : walsh.spectrum) r.spectrum[v - 1] += c;
  r.sqrt_order.reset();
  return r;
}

SpectrumReport crosscorrelation_spectrum(const Field& f, std::uint64_t d, const WeilOptions& options) {
  return shifted_to_crosscorrelation(walsh_spectrum(f, d, options));
}

NihoExponent niho_exponent(const Field& f, std::uint64_t s) {
  const std::uint64_t q = f.half_order();
  if (s == 0) throw FieldError("Niho parameter s must be positive");
  return {s * (q - 1) + 1, nt::gcd(2 * s - 1, q + 1) == 1};
}

bool is_degenerate(const Field& f, std::uint64_t d) {
  require_invertible_exponent(f, d);
  const std::uint64_t g = f.order() - 1;
  std::uint64_t pk = 1 % g;
  for (std::uint32_t k = 0; k < f.degree(); ++k) {
    if (d % g == pk) return true;
    pk = nt::mulmod(pk, f.characteristic(), g);
  }
  return false;
}

std::uint64_t nonlinearity(const SpectrumReport& walsh, std::uint64_t field_order) {
  std::uint64_t peak = static_cast<std::uint64_t>(std::llabs(walsh.at_zero));
  for (const auto& [v, c] : walsh.spectrum) peak = std::max<std::uint64_t>(peak, std::llabs(v));
  return (field_order - peak) / 2;
}

std::uint64_t nonlinearity(const Field& f, std::uint64_t d, const WeilOptions& options) {
  if (f.characteristic() != 2) throw FieldError("nonlinearity is defined for characteristic 2 only");
  return nonlinearity(walsh_spectrum(f, d, options), f.order());
}

std::map<std::uint64_t, std::uint64_t> code_weights_from_values(const Field& f,
                                                                const std::vector<std::int64_t>& w_nonzero) {
  const std::uint64_t p = f.characteristic();
  const std::uint64_t q = f.order();
  const std::uint64_t base = (p - 1) * (q / p);
  std::map<std::uint64_t, std::uint64_t> out;
  out[0] += 1;
  out[base] += 2 * (q - 1);
  for (const auto w : w_nonzero) {
    if (w % static_cast<std::int64_t>(p) != 0) {
      throw FieldError("internal: W(a) = " + std::to_string(w) + " not divisible by p");
    }
    const std::int64_t weight = static_cast<std::int64_t>(base) - static_cast<std::int64_t>(p - 1) * w /
                                                                     static_cast<std::int64_t>(p);
    if (weight < 0) throw FieldError("internal: negative codeword weight");
    out[static_cast<std::uint64_t>(weight)] += q - 1;
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> cyclic_code_weights(const Field& f, std::uint64_t d,
                                                           const WeilOptions& options) {
  require_invertible_exponent(f, d);
  const std::uint32_t p = f.characteristic();
  if ((d - 1) % (p - 1) != 0) throw FieldError("cyclic code weights need d = 1 mod p-1");
  if (is_degenerate(f, d)) throw FieldError("cyclic code weights need a nondegenerate exponent");
  std::vector<std::int64_t> w;
  if (p == 2) {
    const auto all = walsh_values(f, d, options);
    w.assign(all.begin() + 1, all.end());
  } else {
    if (f.order() > options.direct_cap) throw FieldError("|F| exceeds the direct cap");
    for (Value a = 1; a < f.order(); ++a) {
      const auto v = weil_sum(f, d, a).value();
      if (!v) throw FieldError("W(a) is irrational at a = " + std::to_string(a) + "; no integer weight");
      w.push_back(*v);
    }
  }
  return code_weights_from_values(f, w);
}

}  // namespace niho
