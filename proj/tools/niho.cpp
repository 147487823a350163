// niho: command-line front end for the spectrum, key-polynomial, orbit,
// sequence and symmetric-function checks, plus the full campaign.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "niho/campaign.hpp"
#include "niho/factor.hpp"
#include "niho/field.hpp"
#include "niho/keypoly.hpp"
#include "niho/orbits.hpp"
#include "niho/parse.hpp"
#include "niho/sequences.hpp"
#include "niho/symfun.hpp"
#include "niho/weil.hpp"

using json = nlohmann::ordered_json;
using namespace niho;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string field;
  std::string modulus;
  std::string format = "json";
  std::string out;
  std::uint64_t direct_cap = std::uint64_t{1} << 13;
  std::uint64_t seed = 0x6e69686f;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw UsageError("cannot write " + c.out);
  os << text;
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

FieldPtr field_of(const Common& c) {
  if (c.field.empty()) throw UsageError("--field is required");
  return field_from_text(c.field, c.modulus);
}

void require_json(const Common& c) {
  if (c.format != "json") throw UsageError("this command only writes json");
}

WeilOptions weil_options(const Common& c) {
  WeilOptions o;
  o.direct_cap = c.direct_cap;
  return o;
}

int error_exit(const std::string& kind, const std::string& message, const std::string& command) {
  json e;
  e["error"] = {{"kind", kind}, {"message", message}, {"command", command}};
  std::cerr << e.dump() << "\n";
  return kind == "usage" || kind == "domain" ? kUsage : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Niho exponent spectra, key polynomials and orbit sums"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "niho 1.0");

  Common c;
  auto add_common = [&c](CLI::App* sub, bool field) {
    if (field) {
      sub->add_option("--field", c.field, "field, e.g. 2^8 or 3^2");
      sub->add_option("--modulus", c.modulus, "defining polynomial c0,c1,...,cn");
    }
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "output file (a directory for verify-niho and campaign)");
    sub->add_option("--direct-cap", c.direct_cap, "largest |F| enumerated directly");
    sub->add_option("--seed", c.seed, "seed for randomized steps");
  };

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Walsh or crosscorrelation spectrum of x^d");
  add_common(spectrum, true);
  std::optional<std::uint64_t> d_opt;
  std::optional<std::uint32_t> s_opt;
  std::string kind = "walsh";
  bool root_count_only = false;
  spectrum->add_option("--d", d_opt, "exponent");
  spectrum->add_option("--s", s_opt, "Niho parameter; d = s(Q-1)+1");
  spectrum->add_option("--kind", kind, "walsh or crosscorrelation")->check(CLI::IsMember({"walsh", "crosscorrelation"}));
  spectrum->add_flag("--root-count-only", root_count_only, "use W = (Z-1)Q instead of enumeration (needs --s)");

  // verify-niho
  auto* verify = app.add_subcommand("verify-niho", "spectrum containment over GF(4^m)");
  add_common(verify, false);
  std::string m_list = "1,2,3";
  std::uint32_t verify_s = 4;
  bool verify_roots = false;
  verify->add_option("--m", m_list, "comma-separated m values");
  verify->add_option("--s", verify_s, "Niho parameter");
  verify->add_flag("--root-count-only", verify_roots, "allow the root-count path above the direct cap");

  // keyroots
  auto* keyroots = app.add_subcommand("keyroots", "root profile of the key polynomial at a");
  add_common(keyroots, true);
  std::string a_text;
  std::vector<std::string> key_pos;
  keyroots->add_option("--a", a_text, "alpha^k, a coefficient list, or 0");
  keyroots->add_option("args", key_pos, "FIELD and a=ELEMENT");
  bool pair_sum = false;
  keyroots->add_flag("--pair-sum", pair_sum, "also split the roots and evaluate the pair sum");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "orbit of an element under the conjugate-reciprocal map");
  add_common(orbits, true);
  std::string element_text;
  std::uint32_t ext = 1;
  orbits->add_option("--element", element_text, "element of the extension")->required();
  orbits->add_option("--ext", ext, "extension degree over the field")->check(CLI::Range(1u, 64u));

  // sequences
  auto* sequences = app.add_subcommand("sequences", "m-sequence crosscorrelation against the Walsh spectrum");
  add_common(sequences, true);
  std::uint64_t seq_d = 0;
  std::string emit_seq;
  sequences->add_option("--d", seq_d, "decimation")->required();
  sequences->add_option("--emit", emit_seq, "also print the sequences: ascii or hex")
      ->check(CLI::IsMember({"ascii", "hex"}));

  // symfun
  auto* symfun = app.add_subcommand("symfun", "elementary-symmetric decomposition of c");
  add_common(symfun, false);
  bool emit_table = false, verify_table = false, oracle = false;
  std::string table_path;
  symfun->add_flag("--emit-table", emit_table, "print the computed table as csv");
  symfun->add_flag("--verify", verify_table, "diff the computed table against the shipped one (or --table)");
  symfun->add_flag("--oracle", oracle, "cross-check with the evaluation route");
  symfun->add_option("--table", table_path, "csv table to diff against");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "run every acceptance claim");
  add_common(campaign, false);
  std::vector<std::string> camp_fields;
  std::string camp_s = "4";
  std::string camp_table;
  std::vector<std::string> only;
  std::uint32_t trials = 1000;
  bool serial = false;
  campaign->add_option("--field", camp_fields, "extra GF(2^n) fields to verify (repeatable)");
  campaign->add_option("--s", camp_s, "comma-separated s values for the extra fields");
  campaign->add_option("--table", camp_table, "csv table replacing the shipped one");
  campaign->add_option("--only", only, "claim ids or numbers")->delimiter(',');
  campaign->add_option("--trials", trials, "randomized trials per property");
  campaign->add_flag("--serial", serial, "run claims one after another");

  std::string command = argc > 1 ? argv[1] : "";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit("usage", e.what(), command);
  }

  try {
    if (*spectrum) {
      auto f = field_of(c);
      SpectrumReport rep;
      if (root_count_only) {
        if (!s_opt) throw UsageError("--root-count-only needs --s");
        rep = walsh_spectrum_by_roots(f, *s_opt);
        if (d_opt && *d_opt != rep.d) throw UsageError("--d disagrees with --s");
        if (kind == "crosscorrelation") rep = shifted_to_crosscorrelation(rep);
      } else {
        std::uint64_t d = 0;
        if (d_opt) {
          d = *d_opt;
        } else if (s_opt) {
          const auto ne = niho_exponent(*f, *s_opt);
          if (!ne.valid) throw UsageError("s gives a non-invertible exponent");
          d = ne.d;
        } else {
          throw UsageError("one of --d or --s is required");
        }
        rep = kind == "walsh" ? walsh_spectrum(*f, d, weil_options(c)) : crosscorrelation_spectrum(*f, d, weil_options(c));
      }
      emit(c, c.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n");
      return kOk;
    }

    if (*verify) {
      require_json(c);
      bool all = true;
      json out = json::array();
      std::vector<std::pair<std::uint64_t, json>> reports;
      for (auto m : parse_u64_list(m_list, "m")) {
        if (m == 0 || m > 20) throw UsageError("m out of range: " + std::to_string(m));
        auto f = Field::build(2, static_cast<std::uint32_t>(2 * m));
        const auto v = verify_niho_field(f, verify_s, c.direct_cap, verify_roots);
        all = all && v.ok();
        reports.emplace_back(m, v.to_json());
        out.push_back({{"m", m}, {"field", v.field}, {"path", v.path}, {"ok", v.ok()}});
      }
      if (!c.out.empty()) {
        std::filesystem::create_directories(c.out);
        for (const auto& [m, j] : reports) {
          std::ofstream(std::filesystem::path(c.out) / ("niho-m" + std::to_string(m) + ".json"), std::ios::binary)
              << j.dump(2) << "\n";
        }
        std::cout << out.dump(2) << "\n";
      } else {
        json full = json::array();
        for (const auto& [m, j] : reports) full.push_back(j);
        std::cout << full.dump(2) << "\n";
      }
      return all ? kOk : kFailed;
    }

    if (*keyroots) {
      require_json(c);
      for (const auto& p : key_pos) {
        if (p.find('=') != std::string::npos || p.starts_with("alpha")) a_text = p;
        else if (c.field.empty()) c.field = p;
        else throw UsageError("unexpected argument " + p);
      }
      if (a_text.empty()) throw UsageError("--a is required");
      auto f = field_of(c);
      if (f->characteristic() != 2 || !f->even_degree()) throw UsageError("keyroots needs GF(2^n), n even");
      const Value a = parse_element(*f, a_text);
      json j = key_root_profile(f, a).to_json();
      j["a_text"] = render_element(*f, a);
      if (pair_sum) j["pair_sum"] = key_pair_sum_check(f, a, {.seed = c.seed}).to_json();
      emit(c, j);
      return kOk;
    }

    if (*orbits) {
      require_json(c);
      auto base = field_of(c);
      if (base->characteristic() != 2 || !base->even_degree()) throw UsageError("orbits needs GF(2^n), n even");
      auto host = ext == 1 ? base : extension_of_degree(base, ext, base->options());
      const Value r = parse_element(*host, element_text);
      json j = pi_orbit(*base, *host, r).to_json(*host);
      j["element"] = host->coefficients(r);
      emit(c, j);
      return kOk;
    }

    if (*sequences) {
      require_json(c);
      auto f = field_of(c);
      const auto rep = spectrum_equivalence_check(*f, seq_d, weil_options(c));
      json j = rep.to_json();
      if (!emit_seq.empty()) {
        const auto s = m_sequence(*f);
        const auto u = decimate(s, seq_d);
        j["m_sequence"] = emit_seq == "hex" ? s.to_hex() : s.to_ascii();
        j["decimated"] = emit_seq == "hex" ? u.to_hex() : u.to_ascii();
      }
      emit(c, j);
      return rep.ok() ? kOk : kFailed;
    }

    if (*symfun) {
      if (!emit_table && !verify_table && !oracle) throw UsageError("symfun needs --emit-table, --verify or --oracle");
      const auto computed = decompose_elementary(build_c(7));
      if (emit_table) {
        emit(c, table_csv(computed));
        if (!verify_table && !oracle) return kOk;
      }
      json j;
      bool ok = true;
      if (verify_table) {
        ElemExpansion table;
        if (table_path.empty()) {
          table = parse_table_csv(shipped_table_csv());
        } else {
          std::ifstream in(table_path, std::ios::binary);
          if (!in) throw UsageError("cannot read " + table_path);
          std::stringstream ss;
          ss << in.rdbuf();
          table = parse_table_csv(ss.str());
        }
        const auto diff = verify_appendix(computed, table);
        j["summary"] = std::to_string(computed.terms.size()) + " terms, " +
                       std::to_string(diff.missing.size() + diff.extra.size()) + " diffs";
        j["verify"] = diff.to_json();
        ok = ok && diff.ok();
      }
      if (oracle) {
        const auto ev = decompose_c_by_evaluation(7, 42, 12, c.seed);
        const bool agree = ev.terms == computed.terms;
        j["oracle"] = {{"terms", ev.terms.size()}, {"agrees", agree}, {"seed", c.seed}};
        ok = ok && agree;
      }
      if (emit_table) std::cerr << j.dump(2) << "\n";
      else emit(c, j);
      return ok ? kOk : kFailed;
    }

    if (*campaign) {
      CampaignConfig cfg;
      cfg.fields = camp_fields;
      cfg.s_values.clear();
      for (auto s : parse_u64_list(camp_s, "s")) cfg.s_values.push_back(static_cast<std::uint32_t>(s));
      cfg.direct_cap = c.direct_cap;
      cfg.seed = c.seed;
      cfg.out_dir = c.out;
      cfg.format = c.format;
      if (!camp_table.empty()) cfg.table_csv = camp_table;
      cfg.only = only;
      cfg.property_trials = trials;
      cfg.concurrent = !serial;
      const auto summary = run_campaign(cfg);
      write_campaign_reports(summary, cfg);
      std::cout << summary.to_text();
      return summary.all_pass() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    return error_exit("usage", e.what(), command);
  } catch (const FieldError& e) {
    return error_exit("domain", e.what(), command);
  } catch (const std::invalid_argument& e) {
    return error_exit("domain", e.what(), command);
  } catch (const std::exception& e) {
    return error_exit("failure", e.what(), command);
  }
  return kUsage;
}
