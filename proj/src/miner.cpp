#include "farm/miner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace farm {

double MiningConfig::beta_for(std::size_t k) const {
  if (min_support.empty())
    throw std::invalid_argument("minimum support list is empty");
  return min_support[std::min(k - 1, min_support.size() - 1)];
}

std::size_t MiningConfig::level_cap(std::size_t qualified_count) const {
  const std::size_t cap = max_k ? *max_k : static_cast<std::size_t>(lambda);
  return std::min(cap, qualified_count);
}

double support(const MembershipVector& vector) {
  return std::accumulate(vector.degrees.begin(), vector.degrees.end(), 0.0);
}

FrequentLevel frequent_singletons(const QualifiedSchema& schema,
                                  const RelationalTable& table, double beta_1) {
  FrequentLevel level{1, {}};
  for (std::size_t dim = 0; dim < schema.size(); ++dim) {
    for (const std::string& value : schema.dimension(dim).distinct_values) {
      Itemset single({Item{dim, value}});
      const double total = support(membership_vector(schema, table, single));
      if (total >= beta_1) level.entries.emplace(std::move(single), total);
    }
  }
  return level;
}

namespace {

bool same_prefix(const Itemset& a, const Itemset& b, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i)
    if (a.items()[i] != b.items()[i]) return false;
  return true;
}

std::vector<double> min_combine(const std::vector<double>& a,
                                const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace

std::vector<Itemset> generate_candidates(const FrequentLevel& previous) {
  const std::size_t k = previous.k + 1;
  std::vector<const Itemset*> keys;
  keys.reserve(previous.entries.size());
  for (const auto& [itemset, unused] : previous.entries) keys.push_back(&itemset);

  std::vector<Itemset> candidates;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      // Keys are sorted, so itemsets sharing the first k-2 items form a
      // contiguous run; once the prefix diverges no later key joins with i.
      if (!same_prefix(*keys[i], *keys[j], k - 2)) break;
      const Item& left = keys[i]->items().back();
      const Item& right = keys[j]->items().back();
      if (left.dimension == right.dimension) continue;
      Itemset candidate = keys[i]->with(right);
      bool closed = true;
      for (std::size_t drop = 0; drop < k && closed; ++drop)
        closed = previous.entries.contains(candidate.without(drop));
      if (closed) candidates.push_back(std::move(candidate));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return candidates;
}

std::vector<FrequentLevel> mine(const QualifiedSchema& schema,
                                const RelationalTable& table,
                                const MiningConfig& config) {
  if (config.min_support.empty())
    throw std::invalid_argument("minimum support list is empty");
  for (const double beta : config.min_support)
    if (!(beta > 0.0))
      throw std::invalid_argument("minimum support values must be positive");

  std::vector<FrequentLevel> levels;
  const std::size_t cap = config.level_cap(schema.size());
  if (cap == 0) return levels;

  FrequentLevel first = frequent_singletons(schema, table, config.beta_for(1));
  if (first.entries.empty()) return levels;

  std::map<Itemset, std::vector<double>> previous_vectors;
  for (const auto& [itemset, unused] : first.entries)
    previous_vectors.emplace(itemset,
                             membership_vector(schema, table, itemset).degrees);
  levels.push_back(std::move(first));

  for (std::size_t k = 2; k <= cap; ++k) {
    const std::vector<Itemset> candidates = generate_candidates(levels.back());
    if (candidates.empty()) break;

    // A candidate's degree vector is the row-wise min of two parents that
    // jointly cover all of its items: drop-last and drop-first. Both are
    // guaranteed frequent by the subset rule.
    std::vector<std::vector<double>> vectors(candidates.size());
    std::vector<double> supports(candidates.size(), 0.0);
    auto compute = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t c = lo; c < hi; ++c) {
        const Itemset& candidate = candidates[c];
        const auto& head =
            previous_vectors.at(candidate.without(candidate.size() - 1));
        const auto& tail = previous_vectors.at(candidate.without(0));
        vectors[c] = min_combine(head, tail);
        supports[c] =
            std::accumulate(vectors[c].begin(), vectors[c].end(), 0.0);
      }
    };
    const std::size_t workers = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(config.workers, 1)),
        candidates.size());
    if (workers <= 1) {
      compute(0, candidates.size());
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      const std::size_t chunk = (candidates.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(candidates.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(compute, lo, hi);
      }
      for (std::thread& worker : pool) worker.join();
    }

    const double beta = config.beta_for(k);
    FrequentLevel level{k, {}};
    std::map<Itemset, std::vector<double>> next_vectors;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (supports[c] >= beta) {
        level.entries.emplace(candidates[c], supports[c]);
        next_vectors.emplace(candidates[c], std::move(vectors[c]));
      }
    }
    if (level.entries.empty()) break;
    levels.push_back(std::move(level));
    previous_vectors = std::move(next_vectors);
  }
  return levels;
}

}  // namespace farm
