// Shared test data: handcrafted financial-report documents and seeded
// random generators for property tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "mdteds/table.hpp"
#include "mdteds/table_tree.hpp"

namespace mdteds::test {

/// Markdown documents in the style of audited financial report pages:
/// section-header rows, bold totals, fill cells, Note columns, multi-table
/// pages. Every document contains at least one table. At least 20 entries.
const std::vector<std::string>& fixture_documents();

/// One Table 4 style failure pair per criterion, in verdict field order:
/// omitted rows, missing column, dropped header specifier, shifted values,
/// broken delimiter syntax.
struct FailurePair {
  std::string name;
  std::string predicted;
  std::string expected;
};
const std::vector<FailurePair>& failure_fixtures();

/// Synthetic financial page of roughly `rows` x `cols` cells.
std::string synthetic_page(std::size_t rows, std::size_t cols, unsigned seed);

std::string random_cell_text(std::mt19937& rng);
std::string random_document(std::mt19937& rng);

/// Random ordered labeled tree with node count in [1, max_nodes]; cell
/// texts drawn from a three-symbol alphabet.
TableTree random_tree(std::mt19937& rng, int max_nodes);

std::vector<std::vector<double>> random_similarity_matrix(std::mt19937& rng, int max_dim);

}  // namespace mdteds::test
