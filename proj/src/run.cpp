#include "farm/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <utility>

#include "farm/csv.hpp"
#include "farm/miner.hpp"
#include "farm/oracle.hpp"
#include "farm/report.hpp"
#include "farm/rules.hpp"
#include "farm/table.hpp"

namespace farm {

namespace {

constexpr double kTolerance = 1e-9;

void diff_levels(const std::vector<FrequentLevel>& mined,
                 const std::vector<ExactLevel>& exact,
                 std::vector<std::string>& diffs) {
  if (mined.size() != exact.size())
    diffs.push_back("level count: miner " + std::to_string(mined.size()) +
                    " vs oracle " + std::to_string(exact.size()));
  const std::size_t shared = std::min(mined.size(), exact.size());
  for (std::size_t i = 0; i < shared; ++i) {
    const std::string where = "L_" + std::to_string(i + 1);
    for (const auto& [itemset, value] : mined[i].entries) {
      const auto found = exact[i].find(itemset);
      if (found == exact[i].end()) {
        diffs.push_back(where + ": miner extra itemset " + itemset.label());
      } else if (std::fabs(value - found->second.to_double()) > kTolerance) {
        diffs.push_back(where + ": " + itemset.label() + " support miner " +
                        std::to_string(value) + " vs oracle " +
                        std::to_string(found->second.to_double()));
      }
    }
    for (const auto& [itemset, unused] : exact[i])
      if (!mined[i].entries.contains(itemset))
        diffs.push_back(where + ": miner missing itemset " + itemset.label());
  }
}

void diff_rules(const std::vector<Rule>& mined,
                const std::vector<OracleRule>& exact,
                std::vector<std::string>& diffs) {
  std::vector<const Rule*> sorted;
  sorted.reserve(mined.size());
  for (const Rule& rule : mined) sorted.push_back(&rule);
  std::sort(sorted.begin(), sorted.end(), [](const Rule* a, const Rule* b) {
    if (a->antecedent != b->antecedent) return a->antecedent < b->antecedent;
    return a->consequent < b->consequent;
  });

  const auto name = [](const Itemset& a, const Itemset& b) {
    return a.label() + " => " + b.label();
  };
  const auto compare_key = [](const Itemset& a1, const Itemset& c1,
                              const Itemset& a2, const Itemset& c2) {
    if (a1 != a2) return a1 < a2 ? -1 : 1;
    if (c1 != c2) return c1 < c2 ? -1 : 1;
    return 0;
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sorted.size() || j < exact.size()) {
    int order = 0;
    if (i == sorted.size())
      order = 1;
    else if (j == exact.size())
      order = -1;
    else
      order = compare_key(sorted[i]->antecedent, sorted[i]->consequent,
                          exact[j].antecedent, exact[j].consequent);
    if (order < 0) {
      diffs.push_back("rules: miner extra " +
                      name(sorted[i]->antecedent, sorted[i]->consequent));
      ++i;
    } else if (order > 0) {
      diffs.push_back("rules: miner missing " +
                      name(exact[j].antecedent, exact[j].consequent));
      ++j;
    } else {
      if (std::fabs(sorted[i]->confidence - exact[j].confidence) > kTolerance)
        diffs.push_back(
            "rules: " + name(sorted[i]->antecedent, sorted[i]->consequent) +
            " confidence miner " + std::to_string(sorted[i]->confidence) +
            " vs oracle " + std::to_string(exact[j].confidence));
      else if (std::fabs(sorted[i]->support - exact[j].support) > kTolerance)
        diffs.push_back(
            "rules: " + name(sorted[i]->antecedent, sorted[i]->consequent) +
            " support miner " + std::to_string(sorted[i]->support) +
            " vs oracle " + std::to_string(exact[j].support));
      ++i;
      ++j;
    }
  }
}

}  // namespace

int run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  const std::optional<ReportFormat> format = parse_format(options.format);
  if (!format) {
    err << "unknown format: " << options.format << "\n";
    return 2;
  }
  if (options.lambda < 2) {
    err << "lambda must be an integer >= 2\n";
    return 2;
  }
  if (options.min_support.empty()) {
    err << "at least one minimum support value is required\n";
    return 2;
  }
  for (const double beta : options.min_support) {
    if (!(beta > 0.0)) {
      err << "minimum support values must be positive\n";
      return 2;
    }
  }
  if (options.min_confidence < 0.0 || options.min_confidence > 1.0) {
    err << "minimum confidence must lie in [0, 1]\n";
    return 2;
  }
  if (options.max_k && *options.max_k < 1) {
    err << "max-k must be a positive integer\n";
    return 2;
  }
  if (options.workers < 1) {
    err << "workers must be a positive integer\n";
    return 2;
  }

  std::optional<RelationalTable> table;
  try {
    table.emplace(load_csv(options.input, options.tid_column));
  } catch (const ParseError& error) {
    err << options.input << ": " << error.what() << "\n";
    return 1;
  } catch (const EmptyInput& error) {
    err << options.input << ": " << error.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& error) {
    err << options.input << ": " << error.what() << "\n";
    return 1;
  }

  const std::vector<DimensionProfile> profiles = profile_dimensions(*table);
  std::optional<QualifiedSchema> schema;
  try {
    schema.emplace(qualify_dimensions(profiles, options.lambda, table->rows()));
  } catch (const QualificationEmpty& error) {
    err << error.what() << "\n";
    return 4;
  }

  for (const double beta : options.min_support) {
    if (beta > static_cast<double>(schema->size())) {
      err << "minimum support " << beta << " exceeds the qualified dimension"
          << " count " << schema->size() << "\n";
      return 2;
    }
  }

  MiningConfig config;
  config.lambda = options.lambda;
  config.min_support = options.min_support;
  config.min_confidence = options.min_confidence;
  config.max_k = options.max_k;
  config.workers = options.workers;

  const auto start = std::chrono::steady_clock::now();
  std::vector<FrequentLevel> levels = mine(*schema, *table, config);
  if (options.inject_miner_fault && !levels.empty() &&
      !levels.front().entries.empty())
    levels.front().entries.begin()->second += 0.25;
  const std::vector<Rule> rules =
      generate_rules(levels, options.min_confidence);
  const auto stop = std::chrono::steady_clock::now();
  const double timing_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  const RunReport report =
      build_report(*schema, profiles, levels, rules, config, timing_ms);
  emit_report(report, *format, out);

  if (options.oracle) {
    std::vector<ExactLevel> exact;
    try {
      exact = oracle_mine_exact(*schema, *table, config);
    } catch (const OracleTooLarge& error) {
      err << error.what() << "\n";
      return 2;
    }
    const std::vector<OracleRule> exact_rules =
        oracle_rules(exact, options.min_confidence);
    std::vector<std::string> diffs;
    diff_levels(levels, exact, diffs);
    diff_rules(rules, exact_rules, diffs);
    if (!diffs.empty()) {
      out << "\nORACLE DIFF (" << diffs.size() << " mismatches)\n";
      for (const std::string& line : diffs) out << "  " << line << "\n";
      return 3;
    }
  }
  return 0;
}

}  // namespace farm
