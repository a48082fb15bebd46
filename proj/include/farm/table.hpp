#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace farm {

/// Thrown by qualify_dimensions when no dimension passes the lambda filter;
/// mining cannot proceed without a schema.
class QualificationEmpty : public std::runtime_error {
 public:
  explicit QualificationEmpty(int lambda)
      : std::runtime_error("no dimension has between 1 and " +
                           std::to_string(lambda) + " distinct values") {}
};

/// Rectangular grid of categorical cells. Rows are transactions, columns are
/// dimensions; a disengaged cell is a missing value. Immutable after
/// construction.
class RelationalTable {
 public:
  using Cell = std::optional<std::string>;

  RelationalTable(std::vector<std::string> transaction_ids,
                  std::vector<std::string> dimension_names,
                  std::vector<Cell> cells);

  std::size_t rows() const { return transaction_ids_.size(); }
  std::size_t dims() const { return dimension_names_.size(); }

  const Cell& cell(std::size_t row, std::size_t col) const {
    return cells_[row * dimension_names_.size() + col];
  }

  const std::vector<std::string>& transaction_ids() const {
    return transaction_ids_;
  }
  const std::vector<std::string>& dimension_names() const {
    return dimension_names_;
  }

  bool operator==(const RelationalTable&) const = default;

 private:
  std::vector<std::string> transaction_ids_;
  std::vector<std::string> dimension_names_;
  std::vector<Cell> cells_;  // row-major
};

/// Per-column census: distinct non-missing labels in byte order, plus the
/// count of missing cells.
struct DimensionProfile {
  std::size_t column = 0;
  std::string name;
  std::vector<std::string> distinct_values;  // sorted lexicographically
  std::size_t missing_count = 0;

  std::size_t cardinality() const { return distinct_values.size(); }

  bool operator==(const DimensionProfile&) const = default;
};

std::vector<DimensionProfile> profile_dimensions(const RelationalTable& table);

/// The mining schema: dimensions whose cardinality lies in [1, lambda], kept
/// in original column order.
class QualifiedSchema {
 public:
  QualifiedSchema(std::vector<DimensionProfile> qualified, int lambda,
                  std::size_t rows);

  const std::vector<DimensionProfile>& dimensions() const {
    return qualified_;
  }
  const DimensionProfile& dimension(std::size_t index) const {
    return qualified_.at(index);
  }
  /// Number of qualified dimensions.
  std::size_t size() const { return qualified_.size(); }
  int lambda() const { return lambda_; }
  std::size_t rows() const { return rows_; }

 private:
  std::vector<DimensionProfile> qualified_;
  int lambda_ = 0;
  std::size_t rows_ = 0;
};

/// Keeps exactly the profiles with 1 <= cardinality <= lambda, in column
/// order. Throws QualificationEmpty when the filter leaves nothing.
QualifiedSchema qualify_dimensions(const std::vector<DimensionProfile>& profiles,
                                   int lambda, std::size_t rows);

/// One (dimension, value) pair. `dimension` is an ordinal into
/// QualifiedSchema::dimensions(), not a raw table column.
struct Item {
  std::size_t dimension = 0;
  std::string value;

  auto operator<=>(const Item&) const = default;
};

/// A set of items over pairwise-distinct dimensions, stored sorted by
/// (dimension, value). Default construction yields the empty itemset.
class Itemset {
 public:
  Itemset() = default;
  explicit Itemset(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// Copy with one more item; rejects a second item on the same dimension.
  Itemset with(Item item) const;
  /// Copy with the index-th item removed.
  Itemset without(std::size_t index) const;

  /// Value labels joined in canonical order, e.g. "A2 ∧ C2 ∧ D1".
  std::string label() const;

  auto operator<=>(const Itemset&) const = default;

 private:
  std::vector<Item> items_;
};

}  // namespace farm
