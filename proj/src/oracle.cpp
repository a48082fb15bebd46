#include "farm/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace farm {

namespace {

using Wide = __int128;
using UWide = unsigned __int128;

UWide uwide_abs(Wide value) {
  return value < 0 ? static_cast<UWide>(-value) : static_cast<UWide>(value);
}

UWide uwide_gcd(UWide a, UWide b) {
  while (b != 0) {
    const UWide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

long long narrow(Wide value) {
  if (value > static_cast<Wide>(std::numeric_limits<long long>::max()) ||
      value < static_cast<Wide>(std::numeric_limits<long long>::min()))
    throw std::overflow_error("rational out of range");
  return static_cast<long long>(value);
}

Rational reduce(Wide numerator, Wide denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const UWide g = uwide_gcd(uwide_abs(numerator), static_cast<UWide>(denominator));
  if (g > 1) {
    numerator /= static_cast<Wide>(g);
    denominator /= static_cast<Wide>(g);
  }
  return Rational(narrow(numerator), narrow(denominator));
}

int bit_width_uwide(UWide value) {
  const auto high = static_cast<unsigned long long>(value >> 64);
  if (high != 0) return 64 + std::bit_width(high);
  return std::bit_width(static_cast<unsigned long long>(value));
}

}  // namespace

Rational::Rational(long long numerator, long long denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& other) {
  const Wide numerator = static_cast<Wide>(num_) * other.den_ +
                         static_cast<Wide>(other.num_) * den_;
  const Wide denominator = static_cast<Wide>(den_) * other.den_;
  *this = reduce(numerator, denominator);
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("division by zero");
  return reduce(static_cast<Wide>(a.num_) * b.den_,
                static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const Wide lhs = static_cast<Wide>(num_) * other.den_;
  const Wide rhs = static_cast<Wide>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int Rational::compare(double value) const {
  if (std::isnan(value)) throw std::invalid_argument("cannot compare with NaN");
  if (std::isinf(value)) return value > 0 ? -1 : 1;
  const int rational_sign = (num_ > 0) - (num_ < 0);
  const int value_sign = (value > 0) - (value < 0);
  if (rational_sign != value_sign) return rational_sign < value_sign ? -1 : 1;
  if (rational_sign == 0) return 0;

  // |value| = mantissa * 2^shift with an exact 53-bit mantissa, so the
  // magnitude comparison |num|/den vs mantissa*2^shift reduces to integers.
  int exponent = 0;
  const double fraction = std::frexp(std::fabs(value), &exponent);
  const auto mantissa =
      static_cast<unsigned long long>(std::ldexp(fraction, 53));
  const int shift = exponent - 53;

  const UWide abs_num = uwide_abs(num_);
  const UWide den_mant = static_cast<UWide>(den_) * mantissa;
  int magnitude = 0;
  if (shift >= 0) {
    // compare |num| with den*mantissa << shift
    if (shift >= 127 || bit_width_uwide(den_mant) + shift >= 127) {
      magnitude = -1;  // the shifted side exceeds any 64-bit |num|
    } else {
      const UWide rhs = den_mant << shift;
      magnitude = abs_num < rhs ? -1 : abs_num > rhs ? 1 : 0;
    }
  } else {
    // compare |num| << -shift with den*mantissa
    const int up = -shift;
    if (up >= 127 || bit_width_uwide(abs_num) + up >= 127) {
      magnitude = 1;  // den*mantissa tops out below 2^117
    } else {
      const UWide lhs = abs_num << up;
      magnitude = lhs < den_mant ? -1 : lhs > den_mant ? 1 : 0;
    }
  }
  return rational_sign > 0 ? magnitude : -magnitude;
}

Rational oracle_support(const QualifiedSchema& schema,
                        const RelationalTable& table, const Itemset& itemset) {
  Rational total;
  for (std::size_t row = 0; row < table.rows(); ++row) {
    bool mismatch = false;
    Rational degree(1);
    for (const Item& item : itemset.items()) {
      const DimensionProfile& profile = schema.dimension(item.dimension);
      const RelationalTable::Cell& cell = table.cell(row, profile.column);
      if (!cell || *cell != item.value) {
        mismatch = true;
        break;
      }
      const Rational candidate(1, static_cast<long long>(profile.cardinality()));
      if (candidate < degree) degree = candidate;
    }
    if (!mismatch) total += degree;
  }
  return total;
}

namespace {

constexpr long long kEnumerationGuard = 10'000'000;

template <typename Fn>
void each_itemset_of_size(const QualifiedSchema& schema, std::size_t k,
                          std::size_t next_dim, std::vector<Item>& prefix,
                          Fn&& fn) {
  if (prefix.size() == k) {
    fn(Itemset(prefix));
    return;
  }
  const std::size_t needed = k - prefix.size();
  for (std::size_t dim = next_dim; dim + needed <= schema.size(); ++dim) {
    for (const std::string& value : schema.dimension(dim).distinct_values) {
      prefix.push_back(Item{dim, value});
      each_itemset_of_size(schema, k, dim + 1, prefix, fn);
      prefix.pop_back();
    }
  }
}

void check_enumeration_guard(const QualifiedSchema& schema) {
  Wide combinations = 1;
  for (const DimensionProfile& profile : schema.dimensions()) {
    combinations *= static_cast<Wide>(profile.cardinality() + 1);
    if (combinations - 1 > kEnumerationGuard) throw OracleTooLarge();
  }
}

}  // namespace

std::vector<ExactLevel> oracle_mine_exact(const QualifiedSchema& schema,
                                          const RelationalTable& table,
                                          const MiningConfig& config) {
  check_enumeration_guard(schema);

  std::vector<ExactLevel> levels;
  const std::size_t cap = config.level_cap(schema.size());
  for (std::size_t k = 1; k <= cap; ++k) {
    const double beta = config.beta_for(k);
    ExactLevel level;
    std::vector<Item> prefix;
    each_itemset_of_size(schema, k, 0, prefix, [&](Itemset itemset) {
      const Rational total = oracle_support(schema, table, itemset);
      if (total.compare(beta) < 0) return;
      if (k >= 2) {
        const ExactLevel& previous = levels[k - 2];
        for (std::size_t drop = 0; drop < k; ++drop)
          if (!previous.contains(itemset.without(drop))) return;
      }
      level.emplace(std::move(itemset), total);
    });
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<FrequentLevel> oracle_mine(const QualifiedSchema& schema,
                                       const RelationalTable& table,
                                       const MiningConfig& config) {
  std::vector<FrequentLevel> levels;
  for (const ExactLevel& exact : oracle_mine_exact(schema, table, config)) {
    FrequentLevel level{levels.size() + 1, {}};
    for (const auto& [itemset, total] : exact)
      level.entries.emplace(itemset, total.to_double());
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<OracleRule> oracle_rules(const std::vector<ExactLevel>& levels,
                                     double min_confidence) {
  std::vector<OracleRule> rules;
  for (std::size_t index = 1; index < levels.size(); ++index) {
    for (const auto& [itemset, union_support] : levels[index]) {
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
        const auto stored = levels[antecedent.size() - 1].find(antecedent);
        if (stored == levels[antecedent.size() - 1].end())
          throw std::logic_error("oracle levels lost a subset");
        const Rational conf = union_support / stored->second;
        if (conf.compare(min_confidence) < 0) continue;
        rules.push_back(OracleRule{std::move(antecedent), std::move(consequent),
                                   union_support.to_double(),
                                   conf.to_double()});
      }
    }
  }
  std::sort(rules.begin(), rules.end(),
            [](const OracleRule& a, const OracleRule& b) {
              if (a.antecedent != b.antecedent)
                return a.antecedent < b.antecedent;
              return a.consequent < b.consequent;
            });
  return rules;
}

RelationalTable random_table(std::uint64_t seed, std::size_t rows,
                             std::size_t dims, std::size_t max_values,
                             double missing_rate) {
  if (rows == 0 || dims == 0 || max_values == 0)
    throw std::invalid_argument("rows, dims and max_values must be positive");
  std::mt19937_64 rng(seed);
  // Raw engine draws keep the layout identical across standard libraries.
  const auto draw = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  const auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<std::size_t> alphabet(dims);
  for (auto& size : alphabet) size = 1 + draw(max_values);

  std::vector<std::string> ids(rows);
  for (std::size_t row = 0; row < rows; ++row)
    ids[row] = "T" + std::to_string(row + 1);
  std::vector<std::string> names(dims);
  for (std::size_t dim = 0; dim < dims; ++dim)
    names[dim] = "D" + std::to_string(dim + 1);

  std::vector<RelationalTable::Cell> cells;
  cells.reserve(rows * dims);
  for (std::size_t row = 0; row < rows; ++row) {
    for (std::size_t dim = 0; dim < dims; ++dim) {
      if (missing_rate > 0.0 && unit() < missing_rate) {
        cells.emplace_back(std::nullopt);
      } else {
        cells.emplace_back("V" + std::to_string(1 + draw(alphabet[dim])));
      }
    }
  }
  return RelationalTable(std::move(ids), std::move(names), std::move(cells));
}

}  // namespace farm
