#include "mdteds/matching.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "mdteds/errors.hpp"
#include "mdteds/teds.hpp"
#include "mdteds/text_similarity.hpp"

namespace mdteds {

namespace {

// Average cell-wise header similarity, index aligned. With unequal widths
// the shorter header is compared and missing cells score 0 (denominator is
// the wider table).
double header_similarity(const Table& a, const Table& b) {
  const std::size_t wa = a.width();
  const std::size_t wb = b.width();
  if (wa == 0 || wb == 0) return 0.0;
  const std::size_t shared = std::min(wa, wb);
  double sum = 0.0;
  for (std::size_t i = 0; i < shared; ++i) {
    sum += text_similarity(a.header[i].normalized, b.header[i].normalized);
  }
  return sum / static_cast<double>(std::max(wa, wb));
}

bool should_merge(const Table& left, const Table& right, const MergePolicy& policy) {
  if (policy.require_equal_columns && left.width() != right.width()) return false;
  return header_similarity(left, right) > policy.header_similarity_threshold;
}

void absorb(Table& left, const Table& right) {
  const std::size_t offset = left.rows.size();
  for (std::size_t s : right.section_rows) left.section_rows.push_back(s + offset);
  for (const auto& row : right.rows) {
    left.rows.push_back(row);
    // Rows narrower than the surviving header are padded, wider ones cut.
    auto& appended = left.rows.back();
    while (appended.size() < left.width()) appended.push_back(make_fill_cell());
    if (appended.size() > left.width()) appended.resize(left.width());
  }
}

}  // namespace

std::vector<Table> merge_fragmented(std::vector<Table> tables, const MergePolicy& policy) {
  if (!policy.enabled || tables.size() <= 1) return tables;
  std::vector<Table> out;
  out.reserve(tables.size());
  out.push_back(std::move(tables.front()));
  for (std::size_t i = 1; i < tables.size(); ++i) {
    if (should_merge(out.back(), tables[i], policy)) {
      absorb(out.back(), tables[i]);
    } else {
      out.push_back(std::move(tables[i]));
    }
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<double>>;

// O(n^3) Hungarian method on a square cost matrix via row/column
// potentials; returns the assigned column per row.
std::vector<int> hungarian_min(const Matrix& cost) {
  const int n = static_cast<int>(cost.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> match(static_cast<std::size_t>(n) + 1, 0);  // col -> row, 1-based
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = match[static_cast<std::size_t>(j0)];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost[static_cast<std::size_t>(i0) - 1][static_cast<std::size_t>(j) - 1] -
                           u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    if (match[static_cast<std::size_t>(j)] > 0) {
      row_to_col[static_cast<std::size_t>(match[static_cast<std::size_t>(j)]) - 1] = j - 1;
    }
  }
  return row_to_col;
}

// Maximum achievable similarity total; rectangular matrices are padded to
// square with zero-similarity entries.
double max_assignment_total(const Matrix& sim) {
  const std::size_t rows = sim.size();
  const std::size_t cols = rows == 0 ? 0 : sim[0].size();
  if (rows == 0 || cols == 0) return 0.0;
  const std::size_t n = std::max(rows, cols);
  Matrix cost(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cost[i][j] = 1.0 - sim[i][j];
  }
  const std::vector<int> row_to_col = hungarian_min(cost);
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const int j = row_to_col[i];
    if (j >= 0 && static_cast<std::size_t>(j) < cols) total += sim[i][static_cast<std::size_t>(j)];
  }
  return total;
}

Matrix erase_row_col(const Matrix& sim, std::size_t row, std::size_t col) {
  Matrix out;
  out.reserve(sim.size() - 1);
  for (std::size_t i = 0; i < sim.size(); ++i) {
    if (i == row) continue;
    std::vector<double> r;
    r.reserve(sim[i].size() - 1);
    for (std::size_t j = 0; j < sim[i].size(); ++j) {
      if (j != col) r.push_back(sim[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

constexpr double kTieEpsilon = 1e-9;

}  // namespace

AssignmentResult optimal_assignment(const Matrix& sim) {
  AssignmentResult result;
  const std::size_t rows = sim.size();
  const std::size_t cols = rows == 0 ? 0 : sim[0].size();
  if (rows == 0 || cols == 0) return result;

  // Fix pairs greedily in lexicographic order, keeping only choices that
  // still admit the optimal total; this lands on the lexicographically
  // smallest maximum matching.
  Matrix remaining = sim;
  std::vector<std::size_t> row_ids(rows);
  std::vector<std::size_t> col_ids(cols);
  for (std::size_t i = 0; i < rows; ++i) row_ids[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_ids[j] = j;

  double target = max_assignment_total(sim);
  const std::size_t picks = std::min(rows, cols);
  for (std::size_t step = 0; step < picks; ++step) {
    bool committed = false;
    for (std::size_t ri = 0; ri < remaining.size() && !committed; ++ri) {
      for (std::size_t cj = 0; cj < remaining[ri].size() && !committed; ++cj) {
        const Matrix rest = erase_row_col(remaining, ri, cj);
        if (remaining[ri][cj] + max_assignment_total(rest) >= target - kTieEpsilon) {
          result.pairs.emplace_back(static_cast<int>(row_ids[ri]),
                                    static_cast<int>(col_ids[cj]));
          result.total += remaining[ri][cj];
          target -= remaining[ri][cj];
          remaining = rest;
          row_ids.erase(row_ids.begin() + static_cast<std::ptrdiff_t>(ri));
          col_ids.erase(col_ids.begin() + static_cast<std::ptrdiff_t>(cj));
          committed = true;
        }
      }
    }
  }
  return result;
}

DocumentScore score_tables(const std::vector<Table>& pred, const std::vector<Table>& gold) {
  if (gold.empty()) throw RecordError("no reference tables");

  DocumentScore score;
  score.pair_scores.assign(pred.size(), std::vector<double>(gold.size(), 0.0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gold.size(); ++j) {
      score.pair_scores[i][j] = teds_pair(pred[i], gold[j]);
    }
  }
  AssignmentResult assignment = optimal_assignment(score.pair_scores);
  score.assignment = std::move(assignment.pairs);
  score.document_teds =
      assignment.total / static_cast<double>(std::max(pred.size(), gold.size()));
  return score;
}

DocumentScore document_score(const MarkdownDocument& pred, const MarkdownDocument& gold,
                             const MergePolicy& policy) {
  return score_tables(merge_fragmented(pred.tables, policy), gold.tables);
}

}  // namespace mdteds
