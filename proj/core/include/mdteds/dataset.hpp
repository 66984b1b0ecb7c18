#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdteds {

enum class Section { financial_statements, notes };

std::string_view to_string(Section section);
std::optional<Section> section_from_string(std::string_view name);

struct EvalRecord {
  std::string id;
  std::string predicted;
  std::string expected;
  std::optional<Section> section;
};

/// Reads a JSON-Lines dataset: one object per line with keys id, predicted,
/// expected, and optional section. Records come back in file order; blank
/// lines are skipped; LF and CRLF both work. Throws DatasetError naming the
/// line number for malformed lines, missing keys, or duplicate ids.
std::vector<EvalRecord> load_dataset(const std::filesystem::path& path);

}  // namespace mdteds
