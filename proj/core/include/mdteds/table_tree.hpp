#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdteds/table.hpp"

namespace mdteds {

enum class NodeLabel { table, row, cell };

struct TreeNode {
  NodeLabel label = NodeLabel::cell;
  std::string text;            // normalized cell text; empty on structural nodes
  std::vector<int> children;   // indices into TableTree::nodes, in order
};

/// Ordered labeled tree with node 0 as the root.
struct TableTree {
  std::vector<TreeNode> nodes;

  std::size_t node_count() const { return nodes.size(); }

  int add_node(NodeLabel label, std::string text = {}) {
    nodes.push_back(TreeNode{label, std::move(text), {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  void add_child(int parent, int child) { nodes[parent].children.push_back(child); }
};

/// Tree form consumed by the edit-distance engine: a "table" root, one "row"
/// child per row with the header as row 0, and one "cell" child per column
/// carrying the cell's normalized text. Alignment tags are not encoded.
TableTree build_tree(const Table& table);

}  // namespace mdteds
