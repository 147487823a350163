#include "niho/sequences.hpp"

#include <cstdio>

#include "niho/kernels.hpp"
#include "niho/numtheory.hpp"

namespace niho {

namespace {

BinarySequence blank(std::uint64_t period, std::string generator) {
  BinarySequence s;
  s.period = period;
  s.words.assign((period + 63) / 64, 0);
  s.generator = std::move(generator);
  return s;
}

void set(BinarySequence& s, std::uint64_t t) { s.words[t >> 6] |= std::uint64_t{1} << (t & 63); }

void require_same_period(const BinarySequence& u, const BinarySequence& v) {
  if (u.period != v.period) {
    throw std::invalid_argument("sequence periods differ: " + std::to_string(u.period) + " vs " +
                                std::to_string(v.period));
  }
}

}  // namespace

std::uint64_t BinarySequence::weight() const {
  std::uint64_t w = 0;
  for (auto x : words) w += static_cast<std::uint64_t>(__builtin_popcountll(x));
  return w;
}

std::string BinarySequence::to_ascii() const {
  std::string s(period, '0');
  for (std::uint64_t t = 0; t < period; ++t) s[t] = bit(t) ? '1' : '0';
  return s;
}

std::string BinarySequence::to_hex() const {
  std::string out;
  char buf[17];
  for (auto w : words) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

BinarySequence m_sequence(const Field& f) {
  if (f.characteristic() != 2) throw FieldError("m-sequences are binary; got " + f.descriptor());
  const std::uint64_t n = f.order() - 1;
  auto s = blank(n, f.descriptor() + " alpha^1");
  Value x = 1;
  const Value alpha = f.primitive();
  for (std::uint64_t t = 0; t < n; ++t) {
    if (f.trace(x)) set(s, t);
    x = f.mul(x, alpha);
  }
  return s;
}

BinarySequence decimate(const BinarySequence& s, std::uint64_t d) {
  if (nt::gcd(d % s.period, s.period) != 1 && s.period > 1) {
    throw std::invalid_argument("decimation " + std::to_string(d) + " is not coprime to the period");
  }
  auto u = blank(s.period, s.generator + " decimated by " + std::to_string(d));
  std::uint64_t idx = 0;
  const std::uint64_t step = d % s.period;
  for (std::uint64_t t = 0; t < s.period; ++t) {
    if (s.bit(idx)) set(u, t);
    idx += step;
    if (idx >= s.period) idx -= s.period;
  }
  return u;
}

std::int64_t crosscorrelation_direct(const BinarySequence& u, const BinarySequence& v, std::int64_t shift) {
  require_same_period(u, v);
  const auto n = static_cast<std::int64_t>(u.period);
  const std::uint64_t k = static_cast<std::uint64_t>(((shift % n) + n) % n);
  std::int64_t sum = 0;
  for (std::uint64_t t = 0; t < u.period; ++t) sum += u.bit(t + k) != v.bit(t) ? -1 : 1;
  return sum;
}

std::vector<std::int64_t> crosscorrelation_all(const BinarySequence& u, const BinarySequence& v, bool parallel) {
  require_same_period(u, v);
  return parallel ? kernels::crosscorrelation_parallel(u.words, v.words, u.period)
                  : kernels::crosscorrelation_serial(u.words, v.words, u.period);
}

std::uint64_t least_period(const BinarySequence& s) {
  std::uint64_t p = s.period;
  for (auto r : nt::prime_factors(s.period)) {
    while (p % r == 0) {
      const std::uint64_t q = p / r;
      bool same = true;
      for (std::uint64_t t = 0; t < s.period && same; ++t) same = s.bit(t) == s.bit(t + q);
      if (!same) break;
      p = q;
    }
  }
  return p;
}

std::optional<std::uint64_t> shift_between(const BinarySequence& u, const BinarySequence& v) {
  require_same_period(u, v);
  const auto c = crosscorrelation_all(u, v);
  for (std::uint64_t k = 0; k < c.size(); ++k) {
    if (c[k] == static_cast<std::int64_t>(u.period)) return k;
  }
  return std::nullopt;
}

BinarySequence shift_add(const BinarySequence& s, std::uint64_t i, std::uint64_t j) {
  auto out = blank(s.period, s.generator + " shift-add");
  for (std::uint64_t t = 0; t < s.period; ++t) {
    if (s.bit(t + i) != s.bit(t + j)) set(out, t);
  }
  return out;
}

EquivalenceReport spectrum_equivalence_check(const Field& f, std::uint64_t d, const WeilOptions& options) {
  require_invertible_exponent(f, d);
  if (f.order() > options.direct_cap) {
    throw FieldError("|F| = " + std::to_string(f.order()) + " exceeds the direct cap " +
                     std::to_string(options.direct_cap));
  }
  EquivalenceReport r;
  r.field = f.descriptor();
  r.d = d;
  const auto s = m_sequence(f);
  const auto c = crosscorrelation_all(s, decimate(s, d), options.parallel);
  for (auto v : c) ++r.direct[v];
  const auto w = walsh_values(f, d, options);
  for (std::size_t a = 1; a < w.size(); ++a) ++r.from_walsh[w[a] - 1];
  if (!is_degenerate(f, d)) {
    r.weights_checked = true;
    std::vector<std::int64_t> from_c;
    for (auto v : c) from_c.push_back(v + 1);
    r.weights_direct = code_weights_from_values(f, from_c);
    r.weights_walsh = cyclic_code_weights(f, d, options);
  }
  return r;
}

nlohmann::ordered_json EquivalenceReport::to_json() const {
  auto as_list = [](const auto& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [k, c] : m) a.push_back({{"value", k}, {"count", c}});
    return a;
  };
  nlohmann::ordered_json j;
  j["field"] = field;
  j["d"] = d;
  j["crosscorrelation_direct"] = as_list(direct);
  j["walsh_minus_one"] = as_list(from_walsh);
  j["spectra_equal"] = spectra_equal();
  if (weights_checked) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& [k, c] : weights_walsh) w.push_back({{"weight", k}, {"count", c}});
    j["code_weights"] = w;
  }
  j["weights_equal"] = weights_equal();
  j["ok"] = ok();
  return j;
}

}  // namespace niho
