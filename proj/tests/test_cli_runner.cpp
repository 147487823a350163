#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "niho/campaign.hpp"
#include "niho/parse.hpp"
#include "niho/symfun.hpp"

using namespace niho;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("niho_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(parse_field_descriptor("2^8").n == 8);
  CHECK(parse_field_descriptor("GF(2^8)").p == 2);
  const auto d = parse_field_descriptor("9");
  CHECK(d.p == 3);
  CHECK(d.n == 2);
  CHECK(parse_field_descriptor(" 3^2 ").n == 2);
  for (const char* bad : {"6^2", "12", "2^0", "2^", "x", "2^65", "1", ""}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_field_descriptor(bad), UsageError);
  }
}

TEST_CASE("numbers, coefficients and elements") {
  CHECK(parse_u64("42", "n") == 42);
  CHECK_THROWS_AS(parse_u64("-1", "n"), UsageError);
  CHECK_THROWS_AS(parse_u64("4x", "n"), UsageError);
  CHECK(parse_u64_list("1, 2,3", "m") == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(parse_coefficients("1,1,0,0,1") == std::vector<std::uint32_t>{1, 1, 0, 0, 1});

  auto f = field_from_text("2^4");
  CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(parse_element(*f, "alpha^3") == f->exp(3));
  CHECK(parse_element(*f, "a=alpha^3") == f->exp(3));
  CHECK(parse_element(*f, "alpha") == f->primitive());
  CHECK(parse_element(*f, "alpha^18") == f->exp(3));
  CHECK(parse_element(*f, "0,1") == f->primitive());
  CHECK(parse_element(*f, "0") == 0);
  CHECK_THROWS_AS(parse_element(*f, "0,2"), UsageError);
  CHECK_THROWS_AS(parse_element(*f, "1,0,0,0,1"), UsageError);
  CHECK_THROWS_AS(parse_element(*f, "alphax"), UsageError);
  for (std::uint64_t k = 0; k < 15; ++k) CHECK(render_element(*f, f->exp(k)) == "alpha^" + std::to_string(k));
  CHECK(render_element(*f, 0) == "0");
  CHECK_THROWS_AS(field_from_text("2^4", "1,0,1,0,1"), FieldError);
  CHECK(field_from_text("2^4", "1,1,1,1,1")->modulus_is_primitive() == false);
}

TEST_CASE("campaign configuration") {
  CampaignConfig c;
  CHECK_NOTHROW(c.validate());
  c.fields = {"2^16"};
  CHECK_NOTHROW(c.validate());
  c.fields = {"2^15"};
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.fields = {"3^4"};
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.fields.clear();
  c.format = "xml";
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.format = "csv";
  c.property_trials = 0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  CHECK(CampaignConfig{}.to_json()["seed"] == 0x6e69686f);
}

TEST_CASE("claim list") {
  const auto& claims = acceptance_claims();
  REQUIRE(claims.size() == 12);
  CHECK(claims.front().id == "c01-degenerate-base");
  CHECK(claims.back().id == "c12-modulus-invariance");
  CHECK(claims.back().limit_ms == 0);
  CHECK_THROWS_AS(run_claim("c99-nothing", CampaignConfig{}), UsageError);
}

TEST_CASE("quick claims pass and are reproducible") {
  CampaignConfig c;
  c.property_trials = 50;
  for (const char* id : {"c01-degenerate-base", "c02-even-smallest", "c06-ternary-value", "c07-unit-circle-census",
                         "c12-modulus-invariance"}) {
    const auto a = run_claim(id, c);
    const auto b = run_claim(id, c);
    INFO(id << ": " << a.detail);
    CHECK(a.pass);
    CHECK(a.report.dump() == b.report.dump());
  }
}

TEST_CASE("selection by number, id and prefix") {
  CampaignConfig c;
  c.only = {"1", "c06-ternary-value"};
  const auto s = run_campaign(c);
  REQUIRE(s.claims.size() == 2);
  CHECK(s.claims[0].id == "c01-degenerate-base");
  CHECK(s.claims[1].id == "c06-ternary-value");
  CHECK(s.all_pass());
  c.only = {"13"};
  CHECK_THROWS_AS(run_campaign(c), UsageError);
  c.only = {"field"};
  c.fields = {"2^10"};
  const auto f = run_campaign(c);
  REQUIRE(f.claims.size() == 1);
  CHECK(f.claims[0].id == "field-2_10-s4");
  CHECK(f.claims[0].pass);
}

TEST_CASE("report files are append-only and free of timings") {
  const auto dir = scratch("reports");
  CampaignConfig c;
  c.only = {"7"};
  c.out_dir = dir.string();
  auto s = run_campaign(c);
  write_campaign_reports(s, c);
  const auto first = slurp(dir / "c07-unit-circle-census.jsonl");
  s = run_campaign(c);
  write_campaign_reports(s, c);
  const auto both = slurp(dir / "c07-unit-circle-census.jsonl");
  CHECK(both == first + first);
  CHECK(first.find("elapsed") == std::string::npos);
  CHECK(fs::exists(dir / "summary.txt"));
  CHECK(fs::exists(dir / "summary.json"));
  CHECK(slurp(dir / "summary.txt").find("c07-unit-circle-census") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("a corrupted table fails the table claim") {
  const auto dir = scratch("table");
  fs::create_directories(dir);
  const auto table = parse_table_csv(shipped_table_csv());
  auto bad = table;
  bad.terms[4][0] = 9;
  std::ofstream(dir / "bad.csv") << table_csv(bad);
  CampaignConfig c;
  c.only = {"5"};
  c.table_csv = (dir / "bad.csv").string();
  const auto s = run_campaign(c);
  REQUIRE(s.claims.size() == 1);
  CHECK_FALSE(s.claims[0].pass);
  CHECK(s.claims[0].detail.find("diffs against the table") != std::string::npos);
  c.table_csv = (dir / "missing.csv").string();
  CHECK_THROWS_AS(run_campaign(c), UsageError);
  fs::remove_all(dir);
}

TEST_CASE("Niho verification entry point") {
  const auto v = verify_niho_field(field_from_text("2^2"), 4, 1 << 13, false);
  CHECK(v.degenerate);
  CHECK(v.exact_set);
  CHECK(v.normalized == std::set<std::int64_t>{0, 2});
  CHECK(v.ok());
  const auto w = verify_niho_field(field_from_text("2^6"), 4, 1 << 13, false);
  CHECK(w.path == "direct");
  CHECK(w.ok());
  CHECK_THROWS_AS(verify_niho_field(field_from_text("2^16"), 4, 1 << 13, false), UsageError);
  CHECK(verify_niho_field(field_from_text("2^16"), 4, 1 << 13, true).path == "root-count");
  CHECK_THROWS_AS(verify_niho_field(field_from_text("2^5"), 4, 1 << 13, false), UsageError);
  CHECK_THROWS_AS(verify_niho_field(field_from_text("2^4"), 3, 1 << 13, false), UsageError);
}
