#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "niho/field.hpp"
#include "niho/weil.hpp"

namespace niho {

// Packed little-endian bit vector of one period.
struct BinarySequence {
  std::uint64_t period = 0;
  std::vector<std::uint64_t> words;
  std::string generator;

  bool bit(std::uint64_t t) const { return (words[(t % period) >> 6] >> ((t % period) & 63)) & 1; }
  std::uint64_t weight() const;
  std::string to_ascii() const;
  std::string to_hex() const;  // words, most significant nibble first within each word
};

// s_t = Tr(alpha^t), t = 0..|F|-2.
BinarySequence m_sequence(const Field& f);
// u_t = s_{d t mod N}.
BinarySequence decimate(const BinarySequence& s, std::uint64_t d);

std::int64_t crosscorrelation_direct(const BinarySequence& u, const BinarySequence& v, std::int64_t shift);
std::vector<std::int64_t> crosscorrelation_all(const BinarySequence& u, const BinarySequence& v,
                                               bool parallel = true);

// Smallest k > 0 with s_{t+k} = s_t for all t.
std::uint64_t least_period(const BinarySequence& s);
// Shift k with v_t = u_{t+k}, if any.
std::optional<std::uint64_t> shift_between(const BinarySequence& u, const BinarySequence& v);
// Sum of two shifts of s, as a sequence.
BinarySequence shift_add(const BinarySequence& s, std::uint64_t i, std::uint64_t j);

struct EquivalenceReport {
  std::string field;
  std::uint64_t d = 0;
  std::map<std::int64_t, std::uint64_t> direct;      // crosscorrelation over all shifts
  std::map<std::int64_t, std::uint64_t> from_walsh;  // W(a) - 1 over a in F*
  std::map<std::uint64_t, std::uint64_t> weights_direct;
  std::map<std::uint64_t, std::uint64_t> weights_walsh;
  bool weights_checked = false;  // skipped for degenerate d
  bool spectra_equal() const { return direct == from_walsh; }
  bool weights_equal() const { return !weights_checked || weights_direct == weights_walsh; }
  bool ok() const { return spectra_equal() && weights_equal(); }
  nlohmann::ordered_json to_json() const;
};

EquivalenceReport spectrum_equivalence_check(const Field& f, std::uint64_t d, const WeilOptions& options = {});

}  // namespace niho
