#include "farm/table.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace farm {

RelationalTable::RelationalTable(std::vector<std::string> transaction_ids,
                                 std::vector<std::string> dimension_names,
                                 std::vector<Cell> cells)
    : transaction_ids_(std::move(transaction_ids)),
      dimension_names_(std::move(dimension_names)),
      cells_(std::move(cells)) {
  if (transaction_ids_.empty())
    throw std::invalid_argument("table needs at least one row");
  if (dimension_names_.empty())
    throw std::invalid_argument("table needs at least one dimension");
  if (cells_.size() != rows() * dims())
    throw std::invalid_argument("cell grid is not rectangular");
  std::unordered_set<std::string> seen;
  for (const auto& name : dimension_names_) {
    if (name.empty())
      throw std::invalid_argument("dimension names must be non-empty");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate dimension name: " + name);
  }
  for (const auto& cell : cells_)
    if (cell && cell->empty())
      throw std::invalid_argument("present cells must hold non-empty labels");
}

std::vector<DimensionProfile> profile_dimensions(const RelationalTable& table) {
  std::vector<DimensionProfile> profiles;
  profiles.reserve(table.dims());
  for (std::size_t col = 0; col < table.dims(); ++col) {
    DimensionProfile profile;
    profile.column = col;
    profile.name = table.dimension_names()[col];
    std::set<std::string> values;
    for (std::size_t row = 0; row < table.rows(); ++row) {
      const auto& cell = table.cell(row, col);
      if (cell)
        values.insert(*cell);
      else
        ++profile.missing_count;
    }
    profile.distinct_values.assign(values.begin(), values.end());
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

QualifiedSchema::QualifiedSchema(std::vector<DimensionProfile> qualified,
                                 int lambda, std::size_t rows)
    : qualified_(std::move(qualified)), lambda_(lambda), rows_(rows) {
  for (const auto& profile : qualified_)
    if (profile.cardinality() < 1 ||
        profile.cardinality() > static_cast<std::size_t>(lambda_))
      throw std::invalid_argument("schema member '" + profile.name +
                                  "' violates the cardinality bound");
}

QualifiedSchema qualify_dimensions(const std::vector<DimensionProfile>& profiles,
                                   int lambda, std::size_t rows) {
  if (lambda < 2) throw std::invalid_argument("lambda must be at least 2");
  std::vector<DimensionProfile> kept;
  for (const auto& profile : profiles)
    if (profile.cardinality() >= 1 &&
        profile.cardinality() <= static_cast<std::size_t>(lambda))
      kept.push_back(profile);
  if (kept.empty()) throw QualificationEmpty(lambda);
  return QualifiedSchema(std::move(kept), lambda, rows);
}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  for (std::size_t i = 1; i < items_.size(); ++i)
    if (items_[i].dimension == items_[i - 1].dimension)
      throw std::invalid_argument("itemset holds two items of one dimension");
}

Itemset Itemset::with(Item item) const {
  std::vector<Item> extended = items_;
  extended.push_back(std::move(item));
  return Itemset(std::move(extended));
}

Itemset Itemset::without(std::size_t index) const {
  std::vector<Item> reduced = items_;
  reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(index));
  return Itemset(std::move(reduced));
}

std::string Itemset::label() const {
  std::string text;
  for (const auto& item : items_) {
    if (!text.empty()) text += " ∧ ";
    text += item.value;
  }
  return text;
}

}  // namespace farm
