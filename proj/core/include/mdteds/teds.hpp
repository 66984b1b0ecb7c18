#pragma once

#include <functional>

#include "mdteds/table.hpp"
#include "mdteds/table_tree.hpp"

namespace mdteds {

/// Edit costs for the ordered-tree distance. Insert/delete are flat. The
/// default rename cost is 0 for equal-label nodes with equal text, 1 across
/// labels, and 1 - text_similarity for same-label cell nodes; same-label
/// structural nodes rename free. rename_cost_fn overrides that policy when
/// set; it must return values in [0,1] with cost(n, n) == 0.
struct CostModel {
  double insert_cost = 1.0;
  double delete_cost = 1.0;
  std::function<double(const TreeNode&, const TreeNode&)> rename_cost_fn;
};

double default_rename_cost(const TreeNode& a, const TreeNode& b);

/// Minimum-cost ordered-tree edit distance (Zhang-Shasha keyroot dynamic
/// program over postorder node arrays).
double tree_edit_distance(const TableTree& a, const TableTree& b,
                          const CostModel& costs = {});

/// TEDS similarity in [0,1]: 1 - distance / max node count. 1.0 exactly for
/// identical tables.
double teds_pair(const Table& pred, const Table& gold);

}  // namespace mdteds
