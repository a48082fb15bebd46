#include "farm/report.hpp"

#include <cstdio>
#include <ostream>
#include <unordered_set>

namespace farm {

namespace {

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::string json_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void emit_json(const RunReport& report, std::ostream& out) {
  out << "{\n";
  out << "  \"config\": {\n";
  out << "    \"lambda\": " << report.lambda << ",\n";
  out << "    \"beta\": [";
  for (std::size_t i = 0; i < report.beta.size(); ++i)
    out << (i ? ", " : "") << fixed6(report.beta[i]);
  out << "],\n";
  out << "    \"min_confidence\": " << fixed6(report.min_confidence) << ",\n";
  out << "    \"effective_cap\": " << report.effective_cap << "\n";
  out << "  },\n";

  out << "  \"qualified_dimensions\": [";
  for (std::size_t i = 0; i < report.qualified_dimensions.size(); ++i) {
    const ReportDimension& dim = report.qualified_dimensions[i];
    out << (i ? "," : "") << "\n    {\"name\": \"" << json_escape(dim.name)
        << "\", \"cardinality\": " << dim.cardinality << "}";
  }
  out << (report.qualified_dimensions.empty() ? "],\n" : "\n  ],\n");

  out << "  \"excluded_dimensions\": [";
  for (std::size_t i = 0; i < report.excluded_dimensions.size(); ++i) {
    const ReportExclusion& dim = report.excluded_dimensions[i];
    out << (i ? "," : "") << "\n    {\"name\": \"" << json_escape(dim.name)
        << "\", \"cardinality\": " << dim.cardinality << ", \"reason\": \""
        << json_escape(dim.reason) << "\"}";
  }
  out << (report.excluded_dimensions.empty() ? "],\n" : "\n  ],\n");

  out << "  \"levels\": [";
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const ReportLevel& level = report.levels[i];
    out << (i ? "," : "") << "\n    {\n      \"k\": " << level.k
        << ",\n      \"itemsets\": [";
    for (std::size_t j = 0; j < level.itemsets.size(); ++j) {
      const auto& [label, value] = level.itemsets[j];
      out << (j ? "," : "") << "\n        {\"itemset\": \""
          << json_escape(label) << "\", \"support\": " << fixed6(value) << "}";
    }
    out << (level.itemsets.empty() ? "]" : "\n      ]") << "\n    }";
  }
  out << (report.levels.empty() ? "],\n" : "\n  ],\n");

  out << "  \"rules\": [";
  for (std::size_t i = 0; i < report.rules.size(); ++i) {
    const ReportRule& rule = report.rules[i];
    out << (i ? "," : "") << "\n    {\"antecedent\": \""
        << json_escape(rule.antecedent) << "\", \"consequent\": \""
        << json_escape(rule.consequent)
        << "\", \"support\": " << fixed6(rule.support)
        << ", \"confidence\": " << fixed6(rule.confidence) << "}";
  }
  out << (report.rules.empty() ? "],\n" : "\n  ],\n");

  out << "  \"row_count\": " << report.row_count << ",\n";
  out << "  \"timing_ms\": " << fixed6(report.timing_ms) << "\n";
  out << "}\n";
}

void emit_csv(const RunReport& report, std::ostream& out) {
  out << "k,itemset,support\n";
  for (const ReportLevel& level : report.levels)
    for (const auto& [label, value] : level.itemsets)
      out << level.k << ',' << label << ',' << fixed6(value) << '\n';
  out << '\n';
  out << "antecedent,consequent,support,confidence\n";
  for (const ReportRule& rule : report.rules)
    out << rule.antecedent << ',' << rule.consequent << ','
        << fixed6(rule.support) << ',' << fixed6(rule.confidence) << '\n';
}

void emit_text(const RunReport& report, std::ostream& out) {
  out << "rows: " << report.row_count << '\n';
  out << "lambda: " << report.lambda << '\n';
  out << "beta:";
  for (const double beta : report.beta) out << ' ' << fixed6(beta);
  out << '\n';
  out << "min confidence: " << fixed6(report.min_confidence) << '\n';
  out << "effective cap: " << report.effective_cap << '\n';

  out << "qualified dimensions (" << report.qualified_dimensions.size()
      << "):\n";
  for (const ReportDimension& dim : report.qualified_dimensions)
    out << "  " << dim.name << "  cardinality " << dim.cardinality << '\n';
  out << "excluded dimensions (" << report.excluded_dimensions.size()
      << "):\n";
  for (const ReportExclusion& dim : report.excluded_dimensions)
    out << "  " << dim.name << "  cardinality " << dim.cardinality << "  ["
        << dim.reason << "]\n";

  out << '\n';
  if (report.levels.empty()) out << "frequent levels: none\n";
  for (const ReportLevel& level : report.levels) {
    out << "L_" << level.k << " (beta_" << level.k << " = "
        << fixed6(level.beta) << ")\n";
    for (const auto& [label, value] : level.itemsets)
      out << "  " << label << "  " << fixed6(value) << '\n';
  }

  out << '\n';
  out << "rules (" << report.rules.size() << "):\n";
  for (const ReportRule& rule : report.rules)
    out << "  " << rule.antecedent << " => " << rule.consequent
        << "  support " << fixed6(rule.support) << "  confidence "
        << fixed6(rule.confidence) << '\n';

  out << '\n';
  out << "timing: " << fixed6(report.timing_ms) << " ms\n";
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  return std::nullopt;
}

RunReport build_report(const QualifiedSchema& schema,
                       const std::vector<DimensionProfile>& profiles,
                       const std::vector<FrequentLevel>& levels,
                       const std::vector<Rule>& rules,
                       const MiningConfig& config, double timing_ms) {
  RunReport report;
  report.lambda = config.lambda;
  report.beta = config.min_support;
  report.min_confidence = config.min_confidence;
  report.effective_cap = config.level_cap(schema.size());
  report.row_count = schema.rows();
  report.timing_ms = timing_ms;

  std::unordered_set<std::size_t> qualified_columns;
  for (const DimensionProfile& profile : schema.dimensions()) {
    qualified_columns.insert(profile.column);
    report.qualified_dimensions.push_back(
        ReportDimension{profile.name, profile.cardinality()});
  }
  for (const DimensionProfile& profile : profiles) {
    if (qualified_columns.contains(profile.column)) continue;
    ReportExclusion excluded{profile.name, profile.cardinality(), {}};
    if (profile.cardinality() == 0)
      excluded.reason = "no values";
    else
      excluded.reason = "cardinality " + std::to_string(profile.cardinality()) +
                        " exceeds lambda " + std::to_string(config.lambda);
    report.excluded_dimensions.push_back(std::move(excluded));
  }

  for (const FrequentLevel& level : levels) {
    ReportLevel rendered{level.k, config.beta_for(level.k), {}};
    rendered.itemsets.reserve(level.entries.size());
    for (const auto& [itemset, value] : level.entries)
      rendered.itemsets.emplace_back(itemset.label(), value);
    report.levels.push_back(std::move(rendered));
  }

  for (const Rule& rule : rules)
    report.rules.push_back(ReportRule{rule.antecedent.label(),
                                      rule.consequent.label(), rule.support,
                                      rule.confidence});
  return report;
}

void emit_report(const RunReport& report, ReportFormat format,
                 std::ostream& out) {
  switch (format) {
    case ReportFormat::json: emit_json(report, out); break;
    case ReportFormat::csv: emit_csv(report, out); break;
    case ReportFormat::text: emit_text(report, out); break;
  }
}

}  // namespace farm
