#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "niho/field.hpp"

namespace niho {

// Fiber counts N_j = #{x : Tr(x^d - a x) = j}.
struct CharacterSumValue {
  std::vector<std::uint64_t> fiber_counts;

  // Exact integer value when the sum is rational (always for p = 2):
  // N_0 - N_1 once N_1 = ... = N_{p-1}.
  std::optional<std::int64_t> value() const;
};

struct SpectrumReport {
  std::string field;  // "p^n"
  std::uint64_t d = 0;
  std::string kind;   // "walsh" or "crosscorrelation"
  std::string path;   // "direct" or "root-count"
  std::int64_t at_zero = 0;                   // entry for a = 0, kept out of the map
  std::map<std::int64_t, std::uint64_t> spectrum;  // value -> #a in F*
  std::optional<std::uint64_t> sqrt_order;   // n even

  std::uint64_t total() const;
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

struct WeilOptions {
  std::uint64_t direct_cap = std::uint64_t{1} << 13;
  bool parallel = true;
};

void require_invertible_exponent(const Field& f, std::uint64_t d);

CharacterSumValue weil_sum(const Field& f, std::uint64_t d, Value a);
CharacterSumValue weil_sum(const Field& f, std::uint64_t d, const FieldElem& a);

// W(a) for every a (index = encoded value), direct enumeration. p = 2.
std::vector<std::int64_t> walsh_values(const Field& f, std::uint64_t d, const WeilOptions& options = {});

SpectrumReport walsh_spectrum(const Field& f, std::uint64_t d, const WeilOptions& options = {});
SpectrumReport crosscorrelation_spectrum(const Field& f, std::uint64_t d, const WeilOptions& options = {});
// W(a) - 1 shifted copy of a walsh report.
SpectrumReport shifted_to_crosscorrelation(const SpectrumReport& walsh);

struct NihoExponent {
  std::uint64_t d = 0;
  bool valid = false;  // gcd(2s - 1, Q + 1) = 1
};
NihoExponent niho_exponent(const Field& f, std::uint64_t s);

bool is_degenerate(const Field& f, std::uint64_t d);

std::uint64_t nonlinearity(const Field& f, std::uint64_t d, const WeilOptions& options = {});
std::uint64_t nonlinearity(const SpectrumReport& walsh, std::uint64_t field_order);

// weight -> number of codewords.
std::map<std::uint64_t, std::uint64_t> cyclic_code_weights(const Field& f, std::uint64_t d,
                                                           const WeilOptions& options = {});
// Same distribution assembled from a list of W(a), a in F*.
std::map<std::uint64_t, std::uint64_t> code_weights_from_values(const Field& f,
                                                                const std::vector<std::int64_t>& w_nonzero);

}  // namespace niho
