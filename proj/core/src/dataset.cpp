#include "mdteds/dataset.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "mdteds/errors.hpp"

namespace mdteds {

namespace {
using ordered_json = nlohmann::ordered_json;

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string require_string(const ordered_json& object, const char* key, std::size_t line_no) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw DatasetError("line " + std::to_string(line_no) + ": missing key " + key);
  }
  if (!it->is_string()) {
    throw DatasetError("line " + std::to_string(line_no) + ": key " + key +
                       " must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view to_string(Section section) {
  switch (section) {
    case Section::financial_statements: return "financial_statements";
    case Section::notes: return "notes";
  }
  return "";
}

std::optional<Section> section_from_string(std::string_view name) {
  if (name == "financial_statements") return Section::financial_statements;
  if (name == "notes") return Section::notes;
  return std::nullopt;
}

std::vector<EvalRecord> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DatasetError("cannot open dataset file: " + path.string());
  }

  std::vector<EvalRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (first) {
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      first = false;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;

    const ordered_json object = ordered_json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      throw DatasetError("line " + std::to_string(line_no) + ": invalid JSON object");
    }

    EvalRecord record;
    record.id = require_string(object, "id", line_no);
    record.predicted = require_string(object, "predicted", line_no);
    record.expected = require_string(object, "expected", line_no);
    if (const auto it = object.find("section"); it != object.end() && !it->is_null()) {
      if (!it->is_string()) {
        throw DatasetError("line " + std::to_string(line_no) + ": key section must be a string");
      }
      record.section = section_from_string(it->get<std::string>());
      if (!record.section) {
        throw DatasetError("line " + std::to_string(line_no) + ": unknown section '" +
                           it->get<std::string>() + "'");
      }
    }
    if (!seen_ids.insert(record.id).second) {
      throw DatasetError("line " + std::to_string(line_no) + ": duplicate id '" + record.id +
                         "'");
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace mdteds
