#include "mdteds/criteria.hpp"

#include <nlohmann/json.hpp>

#include "mdteds/errors.hpp"
#include "mdteds/llm_judge.hpp"
#include "mdteds/text_similarity.hpp"

namespace mdteds {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string to_json_string(const CriteriaVerdict& verdict) {
  ordered_json j;
  j[std::string(kCriteriaKeys[0])] = verdict.row_count;
  j[std::string(kCriteriaKeys[1])] = verdict.column_count;
  j[std::string(kCriteriaKeys[2])] = verdict.headers;
  j[std::string(kCriteriaKeys[3])] = verdict.item_order;
  j[std::string(kCriteriaKeys[4])] = verdict.formatting;
  return j.dump();
}

bool check_row_count(const std::vector<Table>& pred, const std::vector<Table>& gold,
                     const Assignment& assignment) {
  if (pred.size() != gold.size()) return false;
  for (const auto& [p, g] : assignment) {
    if (pred[static_cast<std::size_t>(p)].rows.size() !=
        gold[static_cast<std::size_t>(g)].rows.size()) {
      return false;
    }
  }
  return true;
}

bool check_column_count(const std::vector<Table>& pred, const std::vector<Table>& gold,
                        const Assignment& assignment) {
  if (pred.size() != gold.size()) return false;
  for (const auto& [p, g] : assignment) {
    if (pred[static_cast<std::size_t>(p)].width() != gold[static_cast<std::size_t>(g)].width()) {
      return false;
    }
  }
  return true;
}

bool check_headers(const std::vector<Table>& pred, const std::vector<Table>& gold,
                   const Assignment& assignment, double threshold) {
  if (pred.size() != gold.size()) return false;
  for (const auto& [p, g] : assignment) {
    const Table& tp = pred[static_cast<std::size_t>(p)];
    const Table& tg = gold[static_cast<std::size_t>(g)];
    const std::size_t shared = std::min(tp.width(), tg.width());
    for (std::size_t i = 0; i < shared; ++i) {
      if (text_similarity(tp.header[i].normalized, tg.header[i].normalized) < threshold) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Row-major normalized data cells, fill cells skipped.
std::vector<std::string_view> cell_sequence(const Table& table) {
  std::vector<std::string_view> seq;
  for (const auto& row : table.rows) {
    for (const Cell& cell : row) {
      if (!cell.is_fill) seq.push_back(cell.normalized);
    }
  }
  return seq;
}

}  // namespace

bool check_item_order(const std::vector<Table>& pred, const std::vector<Table>& gold,
                      const Assignment& assignment) {
  for (const auto& [p, g] : assignment) {
    if (cell_sequence(pred[static_cast<std::size_t>(p)]) !=
        cell_sequence(gold[static_cast<std::size_t>(g)])) {
      return false;
    }
  }
  return true;
}

bool check_formatting(const ParseDiagnostics& pred_diagnostics) {
  if (pred_diagnostics.malformed_delimiter.empty()) return false;
  for (bool malformed : pred_diagnostics.malformed_delimiter) {
    if (malformed) return false;
  }
  return pred_diagnostics.orphan_pipe_lines == 0;
}

RecordEvaluation evaluate_record(std::string_view pred_text, std::string_view gold_text,
                                 const MergePolicy& policy, double header_threshold) {
  RecordEvaluation ev;
  ev.pred = extract_tables(pred_text);
  ev.gold = extract_tables(gold_text);
  ev.merged_pred = merge_fragmented(ev.pred.document.tables, policy);
  ev.score = score_tables(ev.merged_pred, ev.gold.document.tables);

  const std::vector<Table>& gold_tables = ev.gold.document.tables;
  ev.verdict.row_count = check_row_count(ev.merged_pred, gold_tables, ev.score.assignment);
  ev.verdict.column_count = check_column_count(ev.merged_pred, gold_tables, ev.score.assignment);
  ev.verdict.headers =
      check_headers(ev.merged_pred, gold_tables, ev.score.assignment, header_threshold);
  ev.verdict.item_order = check_item_order(ev.merged_pred, gold_tables, ev.score.assignment);
  ev.verdict.formatting = check_formatting(ev.pred.diagnostics);
  return ev;
}

CriteriaVerdict judge_record(std::string_view pred_text, std::string_view gold_text,
                             const JudgeConfig& config, const MergePolicy& policy) {
  if (config.mode == JudgeMode::rules) {
    return evaluate_record(pred_text, gold_text, policy, config.header_similarity_threshold)
        .verdict;
  }
  LlmJudge judge(config);
  return judge.judge(pred_text, gold_text);
}

}  // namespace mdteds
