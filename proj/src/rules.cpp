#include "farm/rules.hpp"

#include <algorithm>
#include <cstdint>

namespace farm {

namespace {

constexpr double kSupportTolerance = 1e-9;

double antecedent_support(const std::vector<FrequentLevel>& levels,
                          const Itemset& antecedent) {
  for (const FrequentLevel& level : levels) {
    if (level.k != antecedent.size()) continue;
    const auto found = level.entries.find(antecedent);
    if (found == level.entries.end())
      throw MissingSubsetSupport(antecedent.label());
    return found->second;
  }
  throw MissingSubsetSupport(antecedent.label());
}

}  // namespace

double confidence(double support_union, double support_antecedent) {
  if (!(support_antecedent > 0.0)) throw ZeroAntecedentSupport();
  if (support_union > support_antecedent + kSupportTolerance)
    throw std::invalid_argument("union support exceeds antecedent support");
  if (support_union < -kSupportTolerance)
    throw std::invalid_argument("union support is negative");
  return std::clamp(support_union / support_antecedent, 0.0, 1.0);
}

std::vector<Rule> generate_rules(const std::vector<FrequentLevel>& levels,
                                 double min_confidence) {
  std::vector<Rule> rules;
  for (const FrequentLevel& level : levels) {
    if (level.k < 2) continue;
    for (const auto& [itemset, union_support] : level.entries) {
      const std::vector<Item>& items = itemset.items();
      const std::size_t k = items.size();
      const std::uint32_t full = (1u << k) - 1u;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<Item> left;
        std::vector<Item> right;
        for (std::size_t i = 0; i < k; ++i)
          (((mask >> i) & 1u) ? left : right).push_back(items[i]);
        Itemset antecedent(std::move(left));
        Itemset consequent(std::move(right));
        const double conf = confidence(
            union_support, antecedent_support(levels, antecedent));
        if (conf >= min_confidence)
          rules.push_back(Rule{std::move(antecedent), std::move(consequent),
                               union_support, conf});
      }
    }
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.support != b.support) return a.support > b.support;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const Rule& a, const Rule& b) {
                            return a.antecedent == b.antecedent &&
                                   a.consequent == b.consequent;
                          }),
              rules.end());
  return rules;
}

}  // namespace farm
