#pragma once

#include <utility>
#include <vector>

#include "mdteds/table.hpp"

namespace mdteds {

/// Controls fuzzy merging of consecutive prediction fragments.
struct MergePolicy {
  /// Merge when the average cell-wise header similarity strictly exceeds
  /// this value.
  double header_similarity_threshold = 0.8;
  /// Require equal column counts before comparing headers. When relaxed,
  /// headers are compared over the shorter width and missing cells score 0.
  bool require_equal_columns = true;
  /// Disable to score fragments as-is.
  bool enabled = true;
};

/// Left-to-right single pass: a merged table keeps absorbing the next
/// fragment while headers stay similar. Absorbed fragments contribute their
/// data rows (headers dropped, section flags re-offset); row order and cell
/// content are never changed. Applied to the prediction side only.
std::vector<Table> merge_fragmented(std::vector<Table> tables, const MergePolicy& policy);

struct AssignmentResult {
  /// One-to-one (row, col) matches of size min(rows, cols), sorted by row;
  /// the lexicographically smallest list among maximum-total matchings.
  std::vector<std::pair<int, int>> pairs;
  double total = 0.0;
};

/// Maximum-total-similarity assignment (Hungarian algorithm). An empty
/// matrix yields an empty assignment with total 0.
AssignmentResult optimal_assignment(const std::vector<std::vector<double>>& sim);

struct DocumentScore {
  /// TEDS for every (pred, gold) table pair; pair_scores[i][j] in [0,1].
  std::vector<std::vector<double>> pair_scores;
  /// Optimal one-to-one (pred, gold) matches; pred indices refer to the
  /// post-merge table list.
  std::vector<std::pair<int, int>> assignment;
  /// Sum of matched pair scores / max(#pred, #gold).
  double document_teds = 0.0;
};

/// Scores a prediction table list (already merged) against the reference
/// list. Throws RecordError when gold is empty; an empty prediction yields
/// a valid score of 0.
DocumentScore score_tables(const std::vector<Table>& pred, const std::vector<Table>& gold);

/// Applies the merge policy to pred's tables, then scores against gold.
DocumentScore document_score(const MarkdownDocument& pred, const MarkdownDocument& gold,
                             const MergePolicy& policy);

}  // namespace mdteds
