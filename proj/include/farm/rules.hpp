#pragma once

#include <stdexcept>
#include <vector>

#include "farm/miner.hpp"
#include "farm/table.hpp"

namespace farm {

/// Antecedent support reached zero or below; antecedents come from frequent
/// levels with positive thresholds, so this flags an upstream bug.
class ZeroAntecedentSupport : public std::logic_error {
 public:
  ZeroAntecedentSupport()
      : std::logic_error("antecedent support must be positive") {}
};

/// A required subset is absent from its frequent level; the levels input is
/// corrupted (downward closure guarantees presence).
class MissingSubsetSupport : public std::logic_error {
 public:
  explicit MissingSubsetSupport(const std::string& label)
      : std::logic_error("no stored support for subset {" + label + "}") {}
};

struct Rule {
  Itemset antecedent;
  Itemset consequent;
  double support = 0.0;    // support of antecedent ∪ consequent
  double confidence = 0.0;
};

/// support(antecedent ∪ consequent) / support(antecedent), clamped to [0, 1]
/// only against floating noise within 1e-9.
double confidence(double support_union, double support_antecedent);

/// Every split of every frequent itemset of size >= 2 into nonempty disjoint
/// antecedent/consequent whose confidence reaches min_confidence, sorted by
/// (confidence desc, support desc, antecedent, consequent).
std::vector<Rule> generate_rules(const std::vector<FrequentLevel>& levels,
                                 double min_confidence);

}  // namespace farm
