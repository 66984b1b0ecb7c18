#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdteds/table.hpp"

namespace mdteds {

struct ParseDiagnostics {
  /// Rows that had to be padded or truncated to the header width.
  int recovered_rows = 0;
  /// Per parsed table: delimiter row missing or invalid (recovery mode).
  std::vector<bool> malformed_delimiter;
  /// Pipe-bearing lines that could not be assigned to any table.
  int orphan_pipe_lines = 0;
};

struct ParsedTable {
  Table table;
  int recovered_rows = 0;
  bool malformed_delimiter = false;
};

struct ParsedDocument {
  MarkdownDocument document;
  ParseDiagnostics diagnostics;
};

/// Isolates every pipe table from a Markdown document. A candidate table is
/// a maximal run of two or more consecutive lines each containing at least
/// one separator pipe (`\|` and pipes inside backtick code spans are
/// literal). Surrounding prose is kept in `source` but never in a table.
/// A document with no tables is a valid result.
ParsedDocument extract_tables(std::string_view source);

/// Parses one maximal table-line run. Line 1 is the header; line 2, when it
/// is a valid delimiter row, supplies alignments, otherwise the table is
/// parsed in recovery mode and flagged malformed. Returns nullopt for runs
/// whose header line does not split into at least two cells.
std::optional<ParsedTable> parse_table(const std::vector<std::string>& lines);

/// Splits a single line into cells on separator pipes. Leading/trailing
/// pipes produce no empty edge cells; `\|` unescapes to a literal pipe.
std::vector<std::string> split_table_row(std::string_view line);

/// True when the line contains at least one separator pipe.
bool is_table_line(std::string_view line);

/// Canonical pipe rendering. Parsing the result back yields a structurally
/// equal table; section rows keep their merged-label syntax.
std::string to_pipe_markdown(const Table& table);
std::string to_pipe_markdown(const std::vector<Table>& tables);

}  // namespace mdteds
