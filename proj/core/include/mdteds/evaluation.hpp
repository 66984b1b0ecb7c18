#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdteds/criteria.hpp"
#include "mdteds/dataset.hpp"

namespace mdteds {

/// Per-record result. Errored records carry an all-false verdict, TEDS 0,
/// and the error message.
struct RecordOutcome {
  std::string id;
  CriteriaVerdict verdict;
  double teds = 0.0;  // [0,1]
  std::optional<std::string> error;
  std::optional<Section> section;
};

/// Pass rates in percent; overall is the mean of the five rates.
struct PassRates {
  double row_count = 0.0;
  double column_count = 0.0;
  double headers = 0.0;
  double item_order = 0.0;
  double formatting = 0.0;
  double overall = 0.0;
  double mean_teds = 0.0;
  std::size_t records = 0;
};

struct AggregateReport {
  PassRates summary;
  /// Present only for sections that appear in the dataset.
  std::map<Section, PassRates> by_section;
  std::vector<RecordOutcome> per_record;  // dataset order
  std::chrono::duration<double> wall_time{0.0};
};

/// Pure aggregation arithmetic over per-record outcomes, split out so the
/// rates can be computed for any verdict set.
AggregateReport aggregate(std::vector<RecordOutcome> outcomes,
                          std::chrono::duration<double> wall_time);

/// Evaluates every record with a bounded worker pool. Record-level errors
/// never abort the batch. Deterministic in rules mode: identical inputs
/// yield identical reports (minus wall_time) at any parallelism level.
AggregateReport run_evaluation(const std::vector<EvalRecord>& records,
                               const JudgeConfig& judge_config,
                               const MergePolicy& merge_policy, int parallelism);

enum class ReportFormat { json, csv, markdown };

std::optional<ReportFormat> report_format_from_string(std::string_view name);

/// json: full structure; csv: header, one row per record, then a summary
/// row; markdown: summary table plus per-record detail. Percentages render
/// with two decimals.
std::string render_report(const AggregateReport& report, ReportFormat format);

}  // namespace mdteds
