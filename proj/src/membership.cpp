#include "farm/membership.hpp"

#include <algorithm>

namespace farm {

bool eta(const QualifiedSchema& schema, const RelationalTable& table,
         std::size_t row, const Item& item) {
  const DimensionProfile& profile = schema.dimension(item.dimension);
  const RelationalTable::Cell& cell = table.cell(row, profile.column);
  return cell && *cell == item.value;
}

double item_degree(const QualifiedSchema& schema, const RelationalTable& table,
                   std::size_t row, const Item& item) {
  if (!eta(schema, table, row, item)) return 0.0;
  return 1.0 / static_cast<double>(schema.dimension(item.dimension).cardinality());
}

double itemset_degree(const QualifiedSchema& schema,
                      const RelationalTable& table, std::size_t row,
                      const Itemset& itemset) {
  double degree = 1.0;
  for (const Item& item : itemset.items()) {
    degree = std::min(degree, item_degree(schema, table, row, item));
    if (degree == 0.0) break;
  }
  return degree;
}

MembershipVector membership_vector(const QualifiedSchema& schema,
                                   const RelationalTable& table,
                                   const Itemset& itemset) {
  MembershipVector vector{itemset, {}};
  vector.degrees.reserve(table.rows());
  for (std::size_t row = 0; row < table.rows(); ++row)
    vector.degrees.push_back(itemset_degree(schema, table, row, itemset));
  return vector;
}

}  // namespace farm
