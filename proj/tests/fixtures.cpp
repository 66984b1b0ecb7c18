#include "fixtures.hpp"

#include <array>
#include <cstddef>
#include <sstream>

namespace mdteds::test {

namespace {

std::string two_entity_header() {
  return "| Item | Note | 2024 Group (RM'000) | 2023 Group (RM'000) | "
         "2024 The Company (RM'000) | 2023 The Company (RM'000) |\n"
         "|:---|:---|---:|---:|---:|---:|\n";
}

std::vector<std::string> build_documents() {
  std::vector<std::string> docs;

  // Income statement flavor with bold totals.
  docs.push_back(
      "## STATEMENTS OF PROFIT OR LOSS\n\n" + two_entity_header() +
      "| Revenue | 4 | 825,410 | 790,122 | 512,004 | 498,377 |\n"
      "| Cost of sales | - | (610,223) | (584,915) | (377,881) | (365,240) |\n"
      "| **Gross profit** | - | **215,187** | **205,207** | **134,123** | **133,137** |\n"
      "| Other income | 5 | 12,884 | 9,045 | 8,112 | 6,930 |\n"
      "| Administrative expenses | - | (98,410) | (93,228) | (61,002) | (58,779) |\n"
      "| **Profit before tax** | 6 | **129,661** | **121,024** | **81,233** | **81,288** |\n");

  // Cash flow statement with merged section-header rows.
  docs.push_back(
      "## STATEMENTS OF CASH FLOWS\n\n"
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| CASH FLOWS FROM OPERATING ACTIVITIES |||\n"
      "| Profit before tax | 129,661 | 121,024 |\n"
      "| Depreciation of property, plant and equipment | 22,004 | 21,556 |\n"
      "| CASH FLOWS FROM INVESTING ACTIVITIES |||\n"
      "| Purchase of property, plant and equipment | (18,330) | (25,104) |\n"
      "| Proceeds from disposal | 1,220 | 904 |\n"
      "| CASH FLOWS FROM FINANCING ACTIVITIES |||\n"
      "| Repayment of borrowings | (42,000) | (36,500) |\n"
      "| Dividends paid | (30,125) | (28,440) |\n"
      "| **Net change in cash and cash equivalents** | **62,430** | **53,440** |\n");

  // Balance sheet slice with fill cells in the Note column.
  docs.push_back(
      "## STATEMENTS OF FINANCIAL POSITION\n### AS AT 31 DECEMBER 2024\n\n"
      "| Item | Note | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|:---|---:|---:|\n"
      "| ASSETS |||||\n"
      "| Property, plant and equipment | 11 | 410,778 | 405,112 |\n"
      "| Right-of-use assets | 12 | 38,334 | 41,209 |\n"
      "| Inventories | - | 96,410 | 88,021 |\n"
      "| Trade and other receivables | 14 | 150,392 | 144,883 |\n"
      "| Cash and bank balances | - | 88,445 | 72,630 |\n"
      "| **TOTAL ASSETS** | - | **784,359** | **751,855** |\n");

  // Notes table: share capital movements.
  docs.push_back(
      "### 15. SHARE CAPITAL\n\n"
      "| Item | Number of shares ('000) | Amount (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| At 1 January 2024 | 512,000 | 256,000 |\n"
      "| Issued during the year | 24,000 | 12,000 |\n"
      "| **At 31 December 2024** | **536,000** | **268,000** |\n");

  // Two-table page (notes: receivables aging plus allowance movement).
  docs.push_back(
      "### 14. TRADE AND OTHER RECEIVABLES\n\n"
      "| Item | 2024 Group (RM'000) | 2023 Group (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Neither past due nor impaired | 102,334 | 98,450 |\n"
      "| Past due 1 to 30 days | 28,410 | 26,003 |\n"
      "| Past due 31 to 90 days | 14,220 | 15,508 |\n"
      "| More than 90 days | 5,428 | 4,922 |\n\n"
      "Movement in allowance for impairment:\n\n"
      "| Allowance for impairment | At 1 January (RM'000) | At 31 December (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Collective assessment | 3,240 | 3,905 |\n"
      "| Individual assessment | 610 | 820 |\n"
      "| **Total allowance** | **3,850** | **4,725** |\n");

  // Segment information with a sparse column.
  docs.push_back(
      "| Segment | Revenue (RM'000) | Results (RM'000) | Assets (RM'000) | Note |\n"
      "|:---|---:|---:|---:|:---|\n"
      "| Plantation | 402,118 | 88,450 | 350,220 | - |\n"
      "| Manufacturing | 310,204 | 34,112 | 280,448 | (a) |\n"
      "| Property | 113,088 | 7,099 | 153,691 | - |\n"
      "| **Total** | **825,410** | **129,661** | **784,359** | - |\n");

  // Deferred tax note with negative balances.
  docs.push_back(
      "### 9. DEFERRED TAX LIABILITIES\n\n"
      "| Item | At 1 January 2024 | Recognised in profit or loss | At 31 December 2024 |\n"
      "|:---|---:|---:|---:|\n"
      "| Property, plant and equipment | 18,420 | 1,204 | 19,624 |\n"
      "| Provisions | (2,310) | (405) | (2,715) |\n"
      "| Unutilised tax losses | (1,008) | 233 | (775) |\n"
      "| **Total** | **15,102** | **1,032** | **16,134** |\n");

  // Statement of changes in equity, wide layout.
  docs.push_back(
      "| Item | Share capital (RM'000) | Retained earnings (RM'000) | "
      "Other reserves (RM'000) | Total (RM'000) |\n"
      "|:---|---:|---:|---:|---:|\n"
      "| At 1 January 2023 | 256,000 | 310,450 | 12,881 | 579,331 |\n"
      "| Profit for the year | - | 93,114 | - | 93,114 |\n"
      "| Dividends | - | (28,440) | - | (28,440) |\n"
      "| **At 31 December 2023** | **256,000** | **375,124** | **12,881** | **644,005** |\n");

  // Borrowings note with maturity buckets and a section row.
  docs.push_back(
      "### 18. BORROWINGS\n\n"
      "| Item | Note | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|:---|---:|---:|\n"
      "| SECURED ||||\n"
      "| Term loans | (a) | 120,500 | 150,200 |\n"
      "| Revolving credits | (b) | 45,000 | 57,300 |\n"
      "| UNSECURED ||||\n"
      "| Bankers' acceptances | - | 12,440 | 9,210 |\n"
      "| **Total borrowings** | - | **177,940** | **216,710** |\n");

  // Earnings per share, tiny table.
  docs.push_back(
      "### 10. EARNINGS PER SHARE\n\n"
      "| Item | 2024 | 2023 |\n"
      "|:---|---:|---:|\n"
      "| Profit attributable to owners (RM'000) | 98,221 | 93,114 |\n"
      "| Weighted average shares ('000) | 524,000 | 512,000 |\n"
      "| Basic earnings per share (sen) | 18.74 | 18.19 |\n");

  // Commitments table with fills for empty comparatives.
  docs.push_back(
      "### 24. CAPITAL COMMITMENTS\n\n"
      "| Item | 2024 Group (RM'000) | 2023 Group (RM'000) | 2024 The Company (RM'000) |\n"
      "|:---|---:|---:|---:|\n"
      "| Approved and contracted for | 55,210 | 48,332 | - |\n"
      "| Approved but not contracted for | 23,400 | - | - |\n"
      "| **Total** | **78,610** | **48,332** | - |\n");

  // Related party disclosures with mixed casing.
  docs.push_back(
      "| Transactions | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Sales to subsidiaries | 88,410 | 81,226 |\n"
      "| purchases from associates | 12,050 | 14,880 |\n"
      "| Rental charged to a subsidiary | 1,440 | 1,440 |\n");

  // Employee benefits with centered alignment.
  docs.push_back(
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---:|:---:|:---:|\n"
      "| Wages and salaries | 182,004 | 171,228 |\n"
      "| Defined contribution plans | 21,840 | 20,547 |\n"
      "| **Total employee benefits** | **203,844** | **191,775** |\n");

  // Financial instruments fair value hierarchy, 5 columns.
  docs.push_back(
      "| Item | Level 1 (RM'000) | Level 2 (RM'000) | Level 3 (RM'000) | Total (RM'000) |\n"
      "|:---|---:|---:|---:|---:|\n"
      "| Quoted equity investments | 20,115 | - | - | 20,115 |\n"
      "| Derivative financial assets | - | 3,004 | - | 3,004 |\n"
      "| Contingent consideration | - | - | 5,500 | 5,500 |\n");

  // Property development costs with long labels.
  docs.push_back(
      "### 13. PROPERTY DEVELOPMENT COSTS\n\n"
      "| Item | Note | 2024 (RM'000) |\n"
      "|:---|:---|---:|\n"
      "| Land held for property development, at cost | (a) | 210,440 |\n"
      "| Development costs incurred during the year | - | 88,302 |\n"
      "| Costs recognised in profit or loss | - | (95,118) |\n"
      "| **At 31 December** | - | **203,624** |\n");

  // Dividends note, one data row only.
  docs.push_back(
      "### 26. DIVIDENDS\n\n"
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Single tier final dividend of 5.75 sen per share | 30,125 | 28,440 |\n");

  // Header-only table (auditors sometimes emit empty continuation pages).
  docs.push_back(
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n");

  // Inventory note with unicode apostrophes.
  docs.push_back(
      "### 12. INVENTORIES\n\n"
      "| Item | 2024 (RM’000) | 2023 (RM’000) |\n"
      "|:---|---:|---:|\n"
      "| Raw materials | 34,008 | 29,551 |\n"
      "| Work in progress | 12,440 | 13,202 |\n"
      "| Finished goods | 49,962 | 45,268 |\n"
      "| **Total inventories** | **96,410** | **88,021** |\n");

  // Three tables on one page. Their headers must stay dissimilar: merging
  // is applied to predictions unconditionally, so near-identical headers on
  // genuinely distinct adjacent tables would collapse.
  docs.push_back(
      "## NOTES — CONTINUED\n\n"
      "| Auditors' remuneration | 2024 (RM'000) |\n"
      "|:---|---:|\n"
      "| Audit fees | 420 |\n"
      "| Non-audit fees | 85 |\n\n"
      "| Directors' emoluments | Amount (RM'000) |\n"
      "|:---|---:|\n"
      "| Directors' remuneration | 3,210 |\n"
      "| Directors' fees | 640 |\n\n"
      "| Other operating expenses | Charge (RM'000) |\n"
      "|:---|---:|\n"
      "| Donations | 150 |\n"
      "| Realised foreign exchange loss | 1,204 |\n");

  // Lease liabilities maturity analysis.
  docs.push_back(
      "### 19. LEASE LIABILITIES\n\n"
      "| Item | Minimum lease payments (RM'000) | Present value (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Within one year | 9,120 | 8,445 |\n"
      "| Between one and five years | 22,508 | 19,773 |\n"
      "| More than five years | 6,004 | 4,981 |\n"
      "| **Total** | **37,632** | **33,199** |\n");

  // Revenue disaggregation with spacer fill rows.
  docs.push_back(
      "### 4. REVENUE\n\n"
      "| Item | 2024 Group (RM'000) | 2023 Group (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Sale of goods | 712,008 | 684,220 |\n"
      "| - | - | - |\n"
      "| Rendering of services | 98,112 | 91,442 |\n"
      "| Rental income | 15,290 | 14,460 |\n"
      "| **Total revenue** | **825,410** | **790,122** |\n");

  // Taxation reconciliation, long note.
  docs.push_back(
      "### 8. TAXATION\n\n"
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Current year income tax | 32,440 | 29,881 |\n"
      "| (Over)/under provision in prior years | (1,204) | 455 |\n"
      "| Deferred tax relating to temporary differences | 1,032 | 886 |\n"
      "| **Tax expense for the year** | **32,268** | **31,222** |\n");

  return docs;
}

std::vector<FailurePair> build_failure_fixtures() {
  std::vector<FailurePair> fixtures;

  // Row count: the prediction drops the blank spacer rows (rows whose cells
  // are all fill markers), so only the row tally changes.
  fixtures.push_back(FailurePair{
      "omitted rows",
      two_entity_header() +
          "| Revenue | 4 | 825,410 | 790,122 | 512,004 | 498,377 |\n"
          "| Cost of sales | - | (610,223) | (584,915) | (377,881) | (365,240) |\n"
          "| **Gross profit** | - | **215,187** | **205,207** | **134,123** | **133,137** |\n",
      two_entity_header() +
          "| Revenue | 4 | 825,410 | 790,122 | 512,004 | 498,377 |\n"
          "| - | - | - | - | - | - |\n"
          "| Cost of sales | - | (610,223) | (584,915) | (377,881) | (365,240) |\n"
          "| - | - | - | - | - | - |\n"
          "| **Gross profit** | - | **215,187** | **205,207** | **134,123** | **133,137** |\n"});

  // Column count: the prediction loses the trailing "2023 Group" column,
  // which carries no values in this note.
  fixtures.push_back(FailurePair{
      "missing column",
      "| Item | Note | 2024 Group (RM'000) |\n"
      "|:---|:---|---:|\n"
      "| Approved and contracted for | (a) | 55,210 |\n"
      "| Approved but not contracted for | - | 23,400 |\n",
      "| Item | Note | 2024 Group (RM'000) | 2023 Group (RM'000) |\n"
      "|:---|:---|---:|---:|\n"
      "| Approved and contracted for | (a) | 55,210 | - |\n"
      "| Approved but not contracted for | - | 23,400 | - |\n"});

  // Headers: the prediction omits the "The Company" specifier.
  fixtures.push_back(FailurePair{
      "dropped header specifier",
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Revenue | 512,004 | 498,377 |\n"
      "| Profit before tax | 81,233 | 81,288 |\n",
      "| Item | 2024 The Company (RM'000) | 2023 The Company (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Revenue | 512,004 | 498,377 |\n"
      "| Profit before tax | 81,233 | 81,288 |\n"});

  // Item order: two values trade places.
  fixtures.push_back(FailurePair{
      "shifted values",
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Raw materials | 29,551 | 34,008 |\n"
      "| Work in progress | 12,440 | 13,202 |\n",
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Raw materials | 34,008 | 29,551 |\n"
      "| Work in progress | 12,440 | 13,202 |\n"});

  // Formatting: the delimiter row is missing, so the table renders as
  // plain text; content is untouched.
  fixtures.push_back(FailurePair{
      "broken delimiter",
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "| Audit fees | 420 | 405 |\n"
      "| Non-audit fees | 85 | 80 |\n",
      "| Item | 2024 (RM'000) | 2023 (RM'000) |\n"
      "|:---|---:|---:|\n"
      "| Audit fees | 420 | 405 |\n"
      "| Non-audit fees | 85 | 80 |\n"});

  return fixtures;
}

}  // namespace

const std::vector<std::string>& fixture_documents() {
  static const std::vector<std::string> docs = build_documents();
  return docs;
}

const std::vector<FailurePair>& failure_fixtures() {
  static const std::vector<FailurePair> fixtures = build_failure_fixtures();
  return fixtures;
}

std::string synthetic_page(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(100, 999999);
  std::ostringstream out;
  out << "## NOTE " << seed << "\n\n|";
  out << " Item |";
  for (std::size_t c = 1; c < cols; ++c) out << " 20" << 10 + c << " (RM'000) |";
  out << "\n|";
  for (std::size_t c = 0; c < cols; ++c) out << (c == 0 ? ":---|" : "---:|");
  out << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    if (r % 11 == 10) {
      out << "| SECTION " << r << " ";
      for (std::size_t c = 0; c < cols; ++c) out << '|';
      out << "\n";
      continue;
    }
    out << "| Line item " << r << " |";
    for (std::size_t c = 1; c < cols; ++c) {
      if ((r + c) % 17 == 0) {
        out << " - |";
      } else {
        out << ' ' << value(rng) << " |";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string random_cell_text(std::mt19937& rng) {
  static constexpr std::array<const char*, 18> kPieces = {
      "Revenue", "Total", "2024", "2023", "RM'000", "-", "(1,204)", "88,410",
      "Group",   "note",  "a",    "b|c",  "x`y",    "**bold**", "  pad ", "",
      "e\xCC\x81t\xC3\xA9",  // decomposed então composed accents
      "Caf\xC3\xA9"};
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::uniform_int_distribution<int> parts(1, 2);
  std::string out;
  const int n = parts(rng);
  for (int i = 0; i < n; ++i) {
    if (i > 0) out.push_back(' ');
    out += kPieces[pick(rng)];
  }
  return out;
}

std::string random_document(std::mt19937& rng) {
  std::uniform_int_distribution<int> block_count(1, 5);
  std::uniform_int_distribution<int> block_kind(0, 5);
  std::uniform_int_distribution<int> cols_dist(1, 5);
  std::uniform_int_distribution<int> rows_dist(0, 6);
  std::uniform_int_distribution<int> coin(0, 1);

  std::string out;
  const int blocks = block_count(rng);
  for (int bi = 0; bi < blocks; ++bi) {
    const int kind = block_kind(rng);
    if (kind == 0) {
      out += "Some explanatory prose without any table syntax.\n";
    } else if (kind == 1) {
      out += "A stray pipe | in running text\n";
    } else {
      const int cols = cols_dist(rng);
      const bool with_delimiter = kind != 2;
      out += '|';
      for (int c = 0; c < cols; ++c) {
        std::string text = random_cell_text(rng);
        std::string escaped;
        for (char ch : text) {
          if (ch == '|') escaped.push_back('\\');
          escaped.push_back(ch);
        }
        out += ' ' + escaped + " |";
      }
      out += '\n';
      if (with_delimiter) {
        out += '|';
        for (int c = 0; c < cols; ++c) {
          switch (coin(rng) + coin(rng)) {
            case 0: out += " --- |"; break;
            case 1: out += " :--- |"; break;
            default: out += " ---: |"; break;
          }
        }
        out += '\n';
      }
      const int rows = rows_dist(rng);
      for (int r = 0; r < rows; ++r) {
        if (coin(rng) == 0 && cols > 1) {
          // Section-style merged label.
          out += "| SECTION HEADING ";
          out.append(static_cast<std::size_t>(cols), '|');
          out += '\n';
          continue;
        }
        // Ragged on purpose: between 1 and cols + 1 cells.
        std::uniform_int_distribution<int> width_dist(1, cols + 1);
        const int width = width_dist(rng);
        out += '|';
        for (int c = 0; c < width; ++c) {
          std::string text = random_cell_text(rng);
          std::string escaped;
          for (char ch : text) {
            if (ch == '|') escaped.push_back('\\');
            escaped.push_back(ch);
          }
          out += ' ' + escaped + " |";
        }
        out += '\n';
      }
    }
    out += '\n';
  }
  return out;
}

TableTree random_tree(std::mt19937& rng, int max_nodes) {
  std::uniform_int_distribution<int> count_dist(1, max_nodes);
  std::uniform_int_distribution<int> label_dist(0, 2);
  static constexpr std::array<const char*, 6> kTexts = {"a", "b", "c", "ab", "bc", "ca"};
  std::uniform_int_distribution<std::size_t> text_dist(0, kTexts.size() - 1);

  const int nodes = count_dist(rng);
  TableTree tree;
  for (int i = 0; i < nodes; ++i) {
    const auto label = static_cast<NodeLabel>(label_dist(rng));
    const int id = tree.add_node(
        label, label == NodeLabel::cell ? std::string(kTexts[text_dist(rng)]) : std::string());
    if (id > 0) {
      std::uniform_int_distribution<int> parent_dist(0, id - 1);
      tree.add_child(parent_dist(rng), id);
    }
  }
  return tree;
}

std::vector<std::vector<double>> random_similarity_matrix(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_int_distribution<int> repeat(0, 3);
  const int rows = dim(rng);
  const int cols = dim(rng);
  std::vector<std::vector<double>> sim(static_cast<std::size_t>(rows),
                                       std::vector<double>(static_cast<std::size_t>(cols)));
  for (auto& row : sim) {
    for (double& cell : row) cell = value(rng);
  }
  // Inject duplicates so ties actually occur.
  if (rows > 1 && cols > 1 && repeat(rng) == 0) {
    sim[1][0] = sim[0][0];
    sim[0][1] = sim[0][0];
  }
  return sim;
}

}  // namespace mdteds::test
