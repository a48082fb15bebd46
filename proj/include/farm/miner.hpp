#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "farm/membership.hpp"
#include "farm/table.hpp"

namespace farm {

/// Knobs for one mining run. min_support[i] is the threshold for
/// (i+1)-itemsets; the last entry repeats for deeper levels.
struct MiningConfig {
  int lambda = 2;
  std::vector<double> min_support;
  double min_confidence = 0.5;
  std::optional<std::size_t> max_k;
  int workers = 1;

  double beta_for(std::size_t k) const;
  /// min(max_k if set else lambda, qualified dimension count).
  std::size_t level_cap(std::size_t qualified_count) const;
};

/// Frequent k-itemsets with their fuzzy supports; every stored support met
/// the threshold applied at this level.
struct FrequentLevel {
  std::size_t k = 0;
  std::map<Itemset, double> entries;
};

/// Fuzzy support: sum of the vector's degrees, in row order.
double support(const MembershipVector& vector);

/// All single items over qualified dimensions whose support reaches beta_1.
FrequentLevel frequent_singletons(const QualifiedSchema& schema,
                                  const RelationalTable& table, double beta_1);

/// Every size-(k) inter-dimension itemset all of whose (k-1)-subsets are keys
/// of `previous`, canonically sorted and free of duplicates.
std::vector<Itemset> generate_candidates(const FrequentLevel& previous);

/// Level-wise search: singletons, then join/prune/threshold until the level
/// cap, an empty candidate set, or an empty level stops it. Returns the
/// non-empty levels in order.
std::vector<FrequentLevel> mine(const QualifiedSchema& schema,
                                const RelationalTable& table,
                                const MiningConfig& config);

}  // namespace farm
