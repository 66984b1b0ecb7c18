#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdteds/cell.hpp"

namespace mdteds {

enum class Alignment { none, left, right, center };

/// A parsed pipe table. Rows are rectangular: every row holds exactly
/// header.size() cells (the parser pads ragged rows with fill cells).
/// section_rows lists the indices of merged-label rows such as
/// `| CASH FLOWS FROM FINANCING ACTIVITIES |||||`.
struct Table {
  std::vector<Cell> header;
  std::vector<Alignment> alignments;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::size_t> section_rows;

  std::size_t width() const { return header.size(); }
};

/// Equality on normalized content: headers, rows, and section flags.
bool structurally_equal(const Table& a, const Table& b);

/// Byte offsets [begin, end) of a table's lines within the source text.
struct TableSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Raw text plus the tables isolated from it, in source order.
/// table_spans are non-overlapping and strictly increasing and
/// parallel to tables.
struct MarkdownDocument {
  std::string source;
  std::vector<Table> tables;
  std::vector<TableSpan> table_spans;
};

}  // namespace mdteds
