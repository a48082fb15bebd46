#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farm/miner.hpp"
#include "farm/rules.hpp"
#include "farm/table.hpp"

namespace farm {

enum class ReportFormat { json, csv, text };

std::optional<ReportFormat> parse_format(std::string_view name);

struct ReportDimension {
  std::string name;
  std::size_t cardinality = 0;
};

struct ReportExclusion {
  std::string name;
  std::size_t cardinality = 0;
  std::string reason;
};

struct ReportLevel {
  std::size_t k = 0;
  double beta = 0.0;  // threshold actually applied at this level
  std::vector<std::pair<std::string, double>> itemsets;  // label, support
};

struct ReportRule {
  std::string antecedent;
  std::string consequent;
  double support = 0.0;
  double confidence = 0.0;
};

/// Everything one run emits. Identical inputs and config produce byte
/// identical renderings in every format; only timing_ms may vary.
struct RunReport {
  int lambda = 0;
  std::vector<double> beta;
  double min_confidence = 0.0;
  std::size_t effective_cap = 0;
  std::vector<ReportDimension> qualified_dimensions;
  std::vector<ReportExclusion> excluded_dimensions;
  std::vector<ReportLevel> levels;
  std::vector<ReportRule> rules;
  std::size_t row_count = 0;
  double timing_ms = 0.0;
};

RunReport build_report(const QualifiedSchema& schema,
                       const std::vector<DimensionProfile>& profiles,
                       const std::vector<FrequentLevel>& levels,
                       const std::vector<Rule>& rules,
                       const MiningConfig& config, double timing_ms);

/// Renders the report. Numbers are fixed to 6 decimals with half-even
/// rounding in every format.
void emit_report(const RunReport& report, ReportFormat format,
                 std::ostream& out);

}  // namespace farm
