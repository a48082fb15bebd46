#pragma once

#include <cstddef>
#include <vector>

#include "farm/table.hpp"

namespace farm {

/// Per-transaction fuzzy degree of one itemset; degrees[i] belongs to row i
/// and lies in [0, 1].
struct MembershipVector {
  Itemset itemset;
  std::vector<double> degrees;
};

/// Boolean membership: 1 iff the row's cell in the item's dimension equals the
/// item's value. A missing cell never matches.
bool eta(const QualifiedSchema& schema, const RelationalTable& table,
         std::size_t row, const Item& item);

/// eta divided by the dimension's cardinality; 0 on a mismatch.
double item_degree(const QualifiedSchema& schema, const RelationalTable& table,
                   std::size_t row, const Item& item);

/// Minimum of item_degree over the itemset's items. The empty itemset has
/// degree 1 (identity of min).
double itemset_degree(const QualifiedSchema& schema,
                      const RelationalTable& table, std::size_t row,
                      const Itemset& itemset);

/// itemset_degree evaluated on every row, in row order.
MembershipVector membership_vector(const QualifiedSchema& schema,
                                   const RelationalTable& table,
                                   const Itemset& itemset);

}  // namespace farm
