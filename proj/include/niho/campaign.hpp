#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "niho/field.hpp"
#include "niho/keypoly.hpp"
#include "niho/weil.hpp"

namespace niho {

// Spectrum check for one field of order 4^m at a Niho exponent.
struct NihoVerification {
  std::string field;
  std::vector<std::uint32_t> modulus;
  std::uint32_t m = 0;
  std::uint32_t s = 0;
  std::uint64_t d = 0;
  std::string path;  // "direct" or "root-count"
  bool degenerate = false;
  std::optional<RootCountIdentityReport> identity;  // direct path only
  SpectrumReport spectrum;
  std::set<std::int64_t> normalized;  // W(a) / Q over a in F*
  std::set<std::int64_t> allowed;     // empty when the containment is not asserted (s != 4)
  bool exact_set = false;             // m = 1: normalized must equal allowed
  bool containment_ok() const;
  bool ok() const { return containment_ok() && (!identity || identity->ok()); }
  nlohmann::ordered_json to_json() const;
};

// Direct enumeration plus the root-count identity when |F| <= direct_cap;
// otherwise the root-count path when allowed, else UsageError.
NihoVerification verify_niho_field(const FieldPtr& f, std::uint32_t s, std::uint64_t direct_cap,
                                   bool allow_root_count);

struct CampaignConfig {
  std::vector<std::string> fields;  // extra verification fields, e.g. "2^16"
  std::vector<std::uint32_t> s_values{4};
  std::uint64_t direct_cap = std::uint64_t{1} << 13;
  std::uint64_t seed = 0x6e69686f;
  std::string out_dir;  // empty: no report files
  std::string format = "json";
  std::optional<std::string> table_csv;  // replaces the shipped table
  std::vector<std::string> only;         // claim ids or 1-based numbers; empty = all
  std::uint32_t property_trials = 1000;
  bool concurrent = true;

  void validate() const;  // UsageError on a bad descriptor, s or format
  nlohmann::ordered_json to_json() const;
};

struct ClaimResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;  // first failure with reproduction state, or a short summary
  nlohmann::ordered_json report;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t limit_ms = 0;  // 0: no limit stated
  bool within_limit() const { return limit_ms == 0 || elapsed_ms < limit_ms; }
};

struct CampaignSummary {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
  bool all_within_limits() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

struct ClaimSpec {
  std::string id;
  std::string title;
  std::uint64_t limit_ms;
};

// The fixed acceptance claims, in order.
const std::vector<ClaimSpec>& acceptance_claims();

ClaimResult run_claim(const std::string& id, const CampaignConfig& config);
CampaignSummary run_campaign(const CampaignConfig& config);
// One compact JSON line per claim appended to <out>/<id>.jsonl, then summary.txt and summary.<format>.
void write_campaign_reports(const CampaignSummary& summary, const CampaignConfig& config);

}  // namespace niho
