#pragma once

#include <array>
#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdteds/matching.hpp"
#include "mdteds/parser.hpp"
#include "mdteds/table.hpp"

namespace mdteds {

/// Five named booleans per record, matching the judge response schema.
struct CriteriaVerdict {
  bool row_count = false;
  bool column_count = false;
  bool headers = false;
  bool item_order = false;
  bool formatting = false;

  bool all_true() const {
    return row_count && column_count && headers && item_order && formatting;
  }
  bool operator==(const CriteriaVerdict&) const = default;
};

/// Response keys, in serialization order.
inline constexpr std::array<std::string_view, 5> kCriteriaKeys = {
    "Correct Row Count",
    "Correct Column Count",
    "Semantically Accurate Headers",
    "Correct Item Order",
    "Valid Markdown Formatting",
};

/// JSON object with exactly the five criteria keys.
std::string to_json_string(const CriteriaVerdict& verdict);

enum class JudgeMode { rules, llm };

struct JudgeConfig {
  JudgeMode mode = JudgeMode::rules;
  /// Minimum per-cell header similarity for the headers criterion.
  double header_similarity_threshold = 0.75;
  /// Chat-completion style endpoint URL; required in llm mode.
  std::string llm_endpoint;
  std::string llm_model;
  /// Disk cache for judge responses; empty disables caching.
  std::string cache_dir;
  /// Environment variable holding the API key; sent as a bearer token
  /// when set and non-empty.
  std::string api_key_env = "OPENAI_API_KEY";
  std::chrono::milliseconds request_timeout{30000};
  int max_concurrent_requests = 4;
  int max_retries = 3;
};

using Assignment = std::vector<std::pair<int, int>>;

/// The checks compare the post-merge prediction tables against gold under
/// the assignment computed by document scoring.
bool check_row_count(const std::vector<Table>& pred, const std::vector<Table>& gold,
                     const Assignment& assignment);
bool check_column_count(const std::vector<Table>& pred, const std::vector<Table>& gold,
                        const Assignment& assignment);
/// Index-aligned header cells of every matched pair must reach the
/// similarity threshold; compared over the shorter width when widths
/// differ (width mismatch itself is column_count's job).
bool check_headers(const std::vector<Table>& pred, const std::vector<Table>& gold,
                   const Assignment& assignment, double threshold);
/// Row-major sequence of normalized non-fill data cells must be identical
/// for every matched pair.
bool check_item_order(const std::vector<Table>& pred, const std::vector<Table>& gold,
                      const Assignment& assignment);
/// At least one table, no malformed delimiter, no orphan pipe lines.
/// Padded rows do not fail formatting.
bool check_formatting(const ParseDiagnostics& pred_diagnostics);

/// Full rules-mode pipeline result for one record.
struct RecordEvaluation {
  ParsedDocument pred;
  ParsedDocument gold;
  std::vector<Table> merged_pred;
  DocumentScore score;
  CriteriaVerdict verdict;
};

/// parse -> merge -> score -> five checks. Throws RecordError when gold
/// contains no tables.
RecordEvaluation evaluate_record(std::string_view pred_text, std::string_view gold_text,
                                 const MergePolicy& policy, double header_threshold = 0.75);

/// Rules mode runs evaluate_record; llm mode renders the judge prompt and
/// queries the configured endpoint (cached on disk). Throws RecordError on
/// judge failures.
CriteriaVerdict judge_record(std::string_view pred_text, std::string_view gold_text,
                             const JudgeConfig& config, const MergePolicy& policy = {});

}  // namespace mdteds
