// Runs the twelve acceptance criteria one after another and prints one line each.
#include <cstdio>

#include "niho/campaign.hpp"

int main() {
  niho::CampaignConfig config;
  config.concurrent = false;
  int failures = 0;
  for (const auto& spec : niho::acceptance_claims()) {
    niho::ClaimResult r;
    try {
      r = niho::run_claim(spec.id, config);
    } catch (const std::exception& e) {
      r.id = spec.id;
      r.limit_ms = spec.limit_ms;
      r.detail = std::string("exception: ") + e.what();
    }
    const bool ok = r.pass && r.within_limit();
    if (!ok) ++failures;
    const std::string limit = spec.limit_ms ? std::to_string(spec.limit_ms) + "ms" : "none";
    std::printf("%s %-26s %6llums / %-9s %s%s\n", ok ? "PASS" : "FAIL", spec.id.c_str(),
                static_cast<unsigned long long>(r.elapsed_ms), limit.c_str(), r.detail.c_str(),
                r.pass && !r.within_limit() ? " [over time limit]" : "");
  }
  std::printf("%d of %zu criteria failed\n", failures, niho::acceptance_claims().size());
  return failures == 0 ? 0 : 1;
}
