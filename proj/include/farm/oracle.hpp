#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "farm/miner.hpp"
#include "farm/table.hpp"

namespace farm {

/// The exhaustive enumeration would exceed the guard; shrink the fixture.
class OracleTooLarge : public std::runtime_error {
 public:
  OracleTooLarge()
      : std::runtime_error(
            "exhaustive enumeration exceeds the 10^7 itemset guard") {}
};

/// Exact fraction in lowest terms with a positive denominator. Arithmetic
/// never rounds; intermediate products run in 128-bit and overflow of the
/// reduced result throws.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational& operator+=(const Rational& other);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  /// Three-way compare against a finite double, exact for every
  /// representable value: -1 below, 0 equal, +1 above.
  int compare(double value) const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Exact fuzzy support computed by a direct row scan; shares only the table
/// types with the main mining path.
Rational oracle_support(const QualifiedSchema& schema,
                        const RelationalTable& table, const Itemset& itemset);

using ExactLevel = std::map<Itemset, Rational>;

/// Brute-force level-wise mining: enumerates every inter-dimension itemset of
/// each size (no join machinery), keeps those meeting the threshold whose
/// smaller subsets all survived, and stops at the first empty level.
std::vector<ExactLevel> oracle_mine_exact(const QualifiedSchema& schema,
                                          const RelationalTable& table,
                                          const MiningConfig& config);

/// oracle_mine_exact with supports converted to double for comparison.
std::vector<FrequentLevel> oracle_mine(const QualifiedSchema& schema,
                                       const RelationalTable& table,
                                       const MiningConfig& config);

struct OracleRule {
  Itemset antecedent;
  Itemset consequent;
  double support = 0.0;
  double confidence = 0.0;
};

/// Exhaustive rule splitter over exact levels, filtering on exact confidence;
/// output sorted by (antecedent, consequent).
std::vector<OracleRule> oracle_rules(const std::vector<ExactLevel>& levels,
                                     double min_confidence);

/// Deterministic pseudo-random categorical table for property tests; equal
/// seeds produce identical tables regardless of platform.
RelationalTable random_table(std::uint64_t seed, std::size_t rows,
                             std::size_t dims, std::size_t max_values,
                             double missing_rate = 0.0);

}  // namespace farm
