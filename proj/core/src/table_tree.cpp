#include "mdteds/table_tree.hpp"

namespace mdteds {

TableTree build_tree(const Table& table) {
  TableTree tree;
  const int root = tree.add_node(NodeLabel::table);

  auto add_row = [&](const std::vector<Cell>& cells) {
    const int row = tree.add_node(NodeLabel::row);
    tree.add_child(root, row);
    for (const Cell& cell : cells) {
      const int leaf = tree.add_node(NodeLabel::cell, cell.normalized);
      tree.add_child(row, leaf);
    }
  };

  add_row(table.header);
  for (const auto& row : table.rows) add_row(row);
  return tree;
}

}  // namespace mdteds
