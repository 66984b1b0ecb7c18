#include "mdteds/parser.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mdteds {

namespace {

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

std::string_view trimmed(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size() && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
  std::size_t end = s.size();
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
  return s.substr(begin, end - begin);
}

// Scans a line once, splitting on separator pipes. `\|` unescapes to a
// literal pipe anywhere on the line, matching the table-row escape rule;
// pipes inside a backtick span (closed on the same line) are literal; an
// unclosed backtick is an ordinary character.
std::vector<std::string> split_segments(std::string_view line, bool* saw_separator) {
  std::vector<std::string> segments;
  std::string current;
  bool separator = false;
  bool in_span = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
      current.push_back('|');
      i += 2;
      continue;
    }
    if (c == '`') {
      if (in_span || line.find('`', i + 1) != std::string_view::npos) {
        in_span = !in_span;
      }
      current.push_back('`');
      ++i;
      continue;
    }
    if (c == '|' && !in_span) {
      separator = true;
      segments.push_back(std::move(current));
      current.clear();
      ++i;
      continue;
    }
    current.push_back(c);
    ++i;
  }
  segments.push_back(std::move(current));
  if (saw_separator != nullptr) *saw_separator = separator;
  return segments;
}

// Delimiter cell: optional colons around one or more dashes.
bool is_delimiter_cell(std::string_view cell) {
  std::string_view s = trimmed(cell);
  if (s.empty()) return false;
  std::size_t begin = 0;
  std::size_t end = s.size();
  if (s[begin] == ':') ++begin;
  if (end > begin && s[end - 1] == ':') --end;
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (s[i] != '-') return false;
  }
  return true;
}

Alignment delimiter_alignment(std::string_view cell) {
  std::string_view s = trimmed(cell);
  const bool left = !s.empty() && s.front() == ':';
  const bool right = !s.empty() && s.back() == ':';
  if (left && right) return Alignment::center;
  if (left) return Alignment::left;
  if (right) return Alignment::right;
  return Alignment::none;
}

bool is_delimiter_row(const std::vector<std::string>& cells) {
  if (cells.empty()) return false;
  for (const auto& cell : cells) {
    if (!is_delimiter_cell(cell)) return false;
  }
  return true;
}

struct Line {
  std::string text;       // without the newline or trailing \r
  std::size_t begin = 0;  // byte offset into the source
};

std::vector<Line> split_lines(std::string_view source) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t nl = source.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? source.size() : nl;
    std::size_t content_end = end;
    if (content_end > pos && source[content_end - 1] == '\r') --content_end;
    lines.push_back(Line{std::string(source.substr(pos, content_end - pos)), pos});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

std::vector<std::string> split_table_row(std::string_view line) {
  bool saw_separator = false;
  std::vector<std::string> segments = split_segments(line, &saw_separator);
  if (!saw_separator) {
    return {std::string(trimmed(line))};
  }
  // A leading/trailing pipe produces no edge cell.
  std::size_t begin = 0;
  std::size_t end = segments.size();
  if (is_blank(segments.front())) ++begin;
  if (end > begin && is_blank(segments.back())) --end;
  std::vector<std::string> cells;
  cells.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    cells.emplace_back(trimmed(segments[i]));
  }
  return cells;
}

bool is_table_line(std::string_view line) {
  bool saw_separator = false;
  split_segments(line, &saw_separator);
  return saw_separator;
}

std::optional<ParsedTable> parse_table(const std::vector<std::string>& lines) {
  if (lines.size() < 2) return std::nullopt;

  const std::vector<std::string> header_cells = split_table_row(lines[0]);
  if (header_cells.size() < 2) return std::nullopt;

  ParsedTable result;
  Table& table = result.table;
  const std::size_t width = header_cells.size();
  for (const auto& cell : header_cells) table.header.push_back(make_cell(cell));

  std::size_t first_data_line = 1;
  std::vector<Alignment> alignments(width, Alignment::none);
  const std::vector<std::string> second = split_table_row(lines[1]);
  if (is_delimiter_row(second)) {
    for (std::size_t i = 0; i < width && i < second.size(); ++i) {
      alignments[i] = delimiter_alignment(second[i]);
    }
    first_data_line = 2;
  } else {
    result.malformed_delimiter = true;
  }
  table.alignments = std::move(alignments);

  for (std::size_t li = first_data_line; li < lines.size(); ++li) {
    std::vector<std::string> cells = split_table_row(lines[li]);
    const bool truncated = cells.size() > width;
    if (truncated) {
      cells.resize(width);
      ++result.recovered_rows;
    }

    // Merged section label: a non-empty first cell followed only by empty
    // cells, judged before any fill-padding. A bare one-cell row stays a
    // plain (padded) row; the pattern needs the explicit trailing pipes.
    // The merged-label syntax routinely underfills its width, so padding a
    // section row is not counted as a recovery.
    bool section = cells.size() >= 2 && !normalize_cell(cells[0]).empty();
    for (std::size_t i = 1; section && i < cells.size(); ++i) {
      if (!normalize_cell(cells[i]).empty()) section = false;
    }

    std::vector<Cell> row;
    row.reserve(width);
    if (section) {
      table.section_rows.push_back(table.rows.size());
      row.push_back(make_cell(cells[0]));
      while (row.size() < width) row.push_back(make_fill_cell());
    } else {
      if (cells.size() < width) ++result.recovered_rows;
      for (const std::string& cell : cells) row.push_back(make_cell(cell));
      while (row.size() < width) row.push_back(make_fill_cell());
    }
    table.rows.push_back(std::move(row));
  }
  return result;
}

ParsedDocument extract_tables(std::string_view source) {
  // Tolerate a UTF-8 BOM.
  if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

  ParsedDocument out;
  out.document.source = std::string(source);

  const std::vector<Line> lines = split_lines(source);
  std::size_t i = 0;
  while (i < lines.size()) {
    if (!is_table_line(lines[i].text)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < lines.size() && is_table_line(lines[j].text)) ++j;

    const std::size_t run_length = j - i;
    std::optional<ParsedTable> parsed;
    if (run_length >= 2) {
      std::vector<std::string> run;
      run.reserve(run_length);
      for (std::size_t k = i; k < j; ++k) run.push_back(lines[k].text);
      parsed = parse_table(run);
    }
    if (parsed.has_value()) {
      out.document.tables.push_back(std::move(parsed->table));
      out.document.table_spans.push_back(
          TableSpan{lines[i].begin, lines[j - 1].begin + lines[j - 1].text.size()});
      out.diagnostics.malformed_delimiter.push_back(parsed->malformed_delimiter);
      out.diagnostics.recovered_rows += parsed->recovered_rows;
    } else {
      out.diagnostics.orphan_pipe_lines += static_cast<int>(run_length);
    }
    i = j;
  }
  return out;
}

namespace {

std::string escape_pipes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void append_row(std::string& out, const std::vector<Cell>& cells) {
  out.push_back('|');
  for (const Cell& cell : cells) {
    out.push_back(' ');
    out += escape_pipes(cell.normalized);
    out += " |";
  }
  out.push_back('\n');
}

}  // namespace

std::string to_pipe_markdown(const Table& table) {
  std::string out;
  append_row(out, table.header);
  out.push_back('|');
  for (Alignment a : table.alignments) {
    switch (a) {
      case Alignment::left: out += " :--- |"; break;
      case Alignment::right: out += " ---: |"; break;
      case Alignment::center: out += " :---: |"; break;
      case Alignment::none: out += " --- |"; break;
    }
  }
  out.push_back('\n');

  std::size_t next_section = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const bool section = next_section < table.section_rows.size() &&
                         table.section_rows[next_section] == r;
    if (section) {
      ++next_section;
      // Merged-label syntax round-trips the section flag.
      out += "| ";
      out += escape_pipes(table.rows[r].front().normalized);
      out.push_back(' ');
      out.append(table.width(), '|');
      out.push_back('\n');
    } else {
      append_row(out, table.rows[r]);
    }
  }
  return out;
}

std::string to_pipe_markdown(const std::vector<Table>& tables) {
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += to_pipe_markdown(tables[i]);
  }
  return out;
}

}  // namespace mdteds
