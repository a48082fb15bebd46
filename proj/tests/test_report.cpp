#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "demo_fixture.hpp"
#include "farm/miner.hpp"
#include "farm/report.hpp"
#include "farm/rules.hpp"
#include "farm/run.hpp"
#include "json.hpp"

using namespace farm;

namespace {

MiningConfig demo_config(double min_confidence) {
  MiningConfig config;
  config.lambda = 3;
  config.min_support = {2.0, 2.0, 1.5};
  config.min_confidence = min_confidence;
  return config;
}

RunReport demo_report(double min_confidence) {
  const MiningConfig config = demo_config(min_confidence);
  const auto levels = mine(demo_schema(), demo_table(), config);
  const auto rules = generate_rules(levels, min_confidence);
  return build_report(demo_schema(), profile_dimensions(demo_table()), levels,
                      rules, config, 0.0);
}

std::string render(const RunReport& report, ReportFormat format) {
  std::ostringstream out;
  emit_report(report, format, out);
  return out.str();
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string kept;
  while (std::getline(in, line))
    if (line.find("timing") == std::string::npos) kept += line + "\n";
  return kept;
}

RunOptions demo_options() {
  RunOptions options;
  options.input = std::string(FARM_FIXTURES_DIR) + "/demo.csv";
  options.lambda = 3;
  options.min_support = {2.0, 2.0, 1.5};
  options.min_confidence = 0.0;
  return options;
}

int run_captured(const RunOptions& options, std::string* output = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(options, out, err);
  if (output) *output = out.str();
  return code;
}

}  // namespace

TEST_CASE("numbers render with six decimals and half-even ties") {
  const RunReport report = demo_report(0.0);
  const std::string csv = render(report, ReportFormat::csv);
  CHECK(csv.find("3,C2 ∧ D1 ∧ E1,1.500000") != std::string::npos);
  CHECK(csv.find("1,C2,3.000000") != std::string::npos);
  CHECK(csv.find("A2,C2,2.000000,0.800000") != std::string::npos);

  // 0.0078125 and 0.0234375 are exact ties at the seventh decimal
  RunReport tie;
  tie.levels.push_back(ReportLevel{1, 1.0, {{"X1", 0.0078125}}});
  tie.levels.push_back(ReportLevel{1, 1.0, {{"X2", 0.0234375}}});
  const std::string rendered = render(tie, ReportFormat::csv);
  CHECK(rendered.find("X1,0.007812") != std::string::npos);
  CHECK(rendered.find("X2,0.023438") != std::string::npos);
}

TEST_CASE("csv reports are two fixed-header tables") {
  const std::string csv = render(demo_report(0.0), ReportFormat::csv);
  CHECK(csv.rfind("k,itemset,support\n", 0) == 0);
  CHECK(csv.find("\n\nantecedent,consequent,support,confidence\n") !=
        std::string::npos);

  RunReport empty;
  CHECK(render(empty, ReportFormat::csv) ==
        "k,itemset,support\n\nantecedent,consequent,support,confidence\n");
}

TEST_CASE("json reports parse and keep the field order") {
  const std::string text = render(demo_report(0.0), ReportFormat::json);
  const auto parsed = nlohmann::ordered_json::parse(text);

  const std::vector<std::string> expected_keys{
      "config",          "qualified_dimensions", "excluded_dimensions",
      "levels",          "rules",                "row_count",
      "timing_ms"};
  std::vector<std::string> keys;
  for (const auto& [key, value] : parsed.items()) keys.push_back(key);
  CHECK(keys == expected_keys);

  CHECK(parsed["config"]["lambda"] == 3);
  CHECK(parsed["config"]["effective_cap"] == 3);
  CHECK(parsed["config"]["beta"].size() == 3);
  CHECK(parsed["row_count"] == 10);
  CHECK(parsed["qualified_dimensions"].size() == 5);
  REQUIRE(parsed["excluded_dimensions"].size() == 1);
  CHECK(parsed["excluded_dimensions"][0]["name"] == "F");
  CHECK(parsed["excluded_dimensions"][0]["cardinality"] == 4);
  REQUIRE(parsed["levels"].size() == 3);
  CHECK(parsed["levels"][0]["k"] == 1);
  CHECK(parsed["levels"][0]["itemsets"][0]["itemset"] == "A1");
  CHECK(parsed["levels"][0]["itemsets"][0]["support"] == doctest::Approx(2.5));
  CHECK(parsed["rules"].size() == 24);
}

TEST_CASE("text reports carry the level and rule sections") {
  const std::string text = render(demo_report(0.0), ReportFormat::text);
  CHECK(text.find("L_1 (beta_1 = 2.000000)") != std::string::npos);
  CHECK(text.find("L_3 (beta_3 = 1.500000)") != std::string::npos);
  CHECK(text.find("A2 ∧ C2 ∧ D1  1.500000") != std::string::npos);
  CHECK(text.find("rules (24):") != std::string::npos);
  CHECK(text.find(" => ") != std::string::npos);
  CHECK(text.find("excluded dimensions (1):") != std::string::npos);
}

TEST_CASE("identical reports serialize to identical bytes") {
  const RunReport report = demo_report(0.5);
  for (const ReportFormat format :
       {ReportFormat::json, ReportFormat::csv, ReportFormat::text})
    CHECK(render(report, format) == render(report, format));
}

TEST_CASE("format names parse") {
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(parse_format("text") == ReportFormat::text);
  CHECK_FALSE(parse_format("yaml").has_value());
}

TEST_CASE("end-to-end runs map failures to exit codes") {
  CHECK(run_captured(demo_options()) == 0);

  SUBCASE("config errors") {
    RunOptions options = demo_options();
    options.lambda = 1;
    CHECK(run_captured(options) == 2);

    options = demo_options();
    options.min_support = {0.0};
    CHECK(run_captured(options) == 2);

    options = demo_options();
    options.min_support = {6.0};  // above the qualified dimension count
    CHECK(run_captured(options) == 2);

    options = demo_options();
    options.format = "yaml";
    CHECK(run_captured(options) == 2);

    options = demo_options();
    options.min_confidence = 1.5;
    CHECK(run_captured(options) == 2);

    options = demo_options();
    options.workers = 0;
    CHECK(run_captured(options) == 2);
  }

  SUBCASE("input errors") {
    RunOptions options = demo_options();
    options.input = std::string(FARM_FIXTURES_DIR) + "/missing.csv";
    CHECK(run_captured(options) == 1);

    options.input = std::string(FARM_FIXTURES_DIR) + "/ragged.csv";
    CHECK(run_captured(options) == 1);

    options.input = std::string(FARM_FIXTURES_DIR) + "/header_only.csv";
    CHECK(run_captured(options) == 1);
  }

  SUBCASE("no qualified dimension") {
    RunOptions options = demo_options();
    options.input = std::string(FARM_FIXTURES_DIR) + "/unqualified.csv";
    options.lambda = 2;
    options.min_support = {1.0};
    CHECK(run_captured(options) == 4);
  }

  SUBCASE("oracle agreement and injected faults") {
    RunOptions options = demo_options();
    options.oracle = true;
    std::string clean_output;
    CHECK(run_captured(options, &clean_output) == 0);
    CHECK(clean_output.find("ORACLE DIFF") == std::string::npos);

    std::string plain_output;
    RunOptions plain = demo_options();
    CHECK(run_captured(plain, &plain_output) == 0);
    CHECK(strip_timing(plain_output) == strip_timing(clean_output));

    options.inject_miner_fault = true;
    std::string faulted_output;
    CHECK(run_captured(options, &faulted_output) == 3);
    CHECK(faulted_output.find("ORACLE DIFF") != std::string::npos);
  }

  SUBCASE("an empty result still succeeds") {
    RunOptions options = demo_options();
    options.min_support = {4.9};
    options.format = "csv";
    std::string output;
    CHECK(run_captured(options, &output) == 0);
    CHECK(output ==
          "k,itemset,support\n\nantecedent,consequent,support,confidence\n");
  }
}
