// Command line front end: evaluate (batch scoring + criteria), score
// (single prediction/reference pair), inspect (table isolation debug).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mdteds/criteria.hpp"
#include "mdteds/dataset.hpp"
#include "mdteds/errors.hpp"
#include "mdteds/evaluation.hpp"
#include "mdteds/matching.hpp"
#include "mdteds/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRecordErrors = 1;
constexpr int kExitUsage = 2;

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mdteds::DatasetError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw mdteds::DatasetError("cannot write file: " + out_path);
  out << text;
}

ordered_json verdict_json(const mdteds::CriteriaVerdict& v) {
  ordered_json j;
  j[std::string(mdteds::kCriteriaKeys[0])] = v.row_count;
  j[std::string(mdteds::kCriteriaKeys[1])] = v.column_count;
  j[std::string(mdteds::kCriteriaKeys[2])] = v.headers;
  j[std::string(mdteds::kCriteriaKeys[3])] = v.item_order;
  j[std::string(mdteds::kCriteriaKeys[4])] = v.formatting;
  return j;
}

struct CommonOptions {
  double merge_threshold = 0.8;
  bool no_merge = false;
  bool require_equal_columns = true;

  mdteds::MergePolicy policy() const {
    mdteds::MergePolicy p;
    p.header_similarity_threshold = merge_threshold;
    p.require_equal_columns = require_equal_columns;
    p.enabled = !no_merge;
    return p;
  }
};

void add_merge_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--merge-threshold", opts.merge_threshold,
                  "Header similarity above which consecutive predicted tables merge")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--no-merge", opts.no_merge, "Disable fuzzy merging of predicted fragments");
  cmd->add_flag("--require-equal-columns,!--no-require-equal-columns",
                opts.require_equal_columns,
                "Only merge fragments with matching column counts (default on)");
}

int run_evaluate(const std::string& dataset_path, const std::string& judge_name,
                 const CommonOptions& common, const std::string& format_name,
                 const std::string& out_path, int parallelism,
                 const mdteds::JudgeConfig& judge_base) {
  mdteds::JudgeConfig judge = judge_base;
  if (judge_name == "rules") {
    judge.mode = mdteds::JudgeMode::rules;
  } else if (judge_name == "llm") {
    judge.mode = mdteds::JudgeMode::llm;
    if (judge.llm_endpoint.empty() || judge.llm_model.empty()) {
      std::cerr << "error: --judge llm requires --llm-endpoint and --llm-model\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "error: unknown judge '" << judge_name << "'\n";
    return kExitUsage;
  }

  const auto format = mdteds::report_format_from_string(format_name);
  if (!format) {
    std::cerr << "error: unknown format '" << format_name << "'\n";
    return kExitUsage;
  }

  const std::vector<mdteds::EvalRecord> records = mdteds::load_dataset(dataset_path);
  if (records.empty()) {
    std::cerr << "error: dataset contains no records\n";
    return kExitUsage;
  }
  const mdteds::AggregateReport report =
      mdteds::run_evaluation(records, judge, common.policy(), parallelism);
  write_output(mdteds::render_report(report, *format), out_path);

  for (const auto& record : report.per_record) {
    if (record.error) return kExitRecordErrors;
  }
  return kExitOk;
}

int run_score(const std::string& pred_path, const std::string& gold_path,
              const CommonOptions& common, double header_threshold) {
  const std::string pred_text = read_file(pred_path);
  const std::string gold_text = read_file(gold_path);
  try {
    const mdteds::RecordEvaluation ev =
        mdteds::evaluate_record(pred_text, gold_text, common.policy(), header_threshold);

    ordered_json j;
    j["document_teds"] = ev.score.document_teds;
    j["predicted_tables"] = ev.pred.document.tables.size();
    j["predicted_tables_after_merge"] = ev.merged_pred.size();
    j["reference_tables"] = ev.gold.document.tables.size();
    ordered_json pairs = ordered_json::array();
    for (const auto& [p, g] : ev.score.assignment) {
      ordered_json pair;
      pair["predicted"] = p;
      pair["reference"] = g;
      pair["teds"] = ev.score.pair_scores[static_cast<std::size_t>(p)][static_cast<std::size_t>(g)];
      pairs.push_back(std::move(pair));
    }
    j["assignment"] = std::move(pairs);
    j["pair_scores"] = ev.score.pair_scores;
    j["criteria"] = verdict_json(ev.verdict);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  } catch (const mdteds::RecordError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRecordErrors;
  }
}

int run_inspect(const std::string& file_path) {
  const std::string text = read_file(file_path);
  const mdteds::ParsedDocument parsed = mdteds::extract_tables(text);

  std::cout << "tables: " << parsed.document.tables.size() << '\n';
  std::cout << "orphan pipe lines: " << parsed.diagnostics.orphan_pipe_lines << '\n';
  std::cout << "recovered rows: " << parsed.diagnostics.recovered_rows << '\n';
  for (std::size_t i = 0; i < parsed.document.tables.size(); ++i) {
    const mdteds::Table& table = parsed.document.tables[i];
    const mdteds::TableSpan span = parsed.document.table_spans[i];
    std::cout << "\n-- table " << i + 1 << " [bytes " << span.begin << ".." << span.end << ")"
              << (parsed.diagnostics.malformed_delimiter[i] ? ", malformed delimiter" : "")
              << ": " << table.width() << " columns, " << table.rows.size() << " rows";
    if (!table.section_rows.empty()) {
      std::cout << ", section rows:";
      for (std::size_t s : table.section_rows) std::cout << ' ' << s;
    }
    std::cout << "\n" << mdteds::to_pipe_markdown(table);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markdown table evaluation: TEDS scoring and five-criterion checks"};
  app.require_subcommand(1);

  // evaluate
  std::string dataset_path;
  std::string judge_name = "rules";
  std::string format_name = "json";
  std::string out_path;
  int parallelism = 4;
  CommonOptions eval_common;
  mdteds::JudgeConfig judge_config;

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a JSON-Lines dataset");
  evaluate->add_option("--dataset", dataset_path, "JSON-Lines file with id/predicted/expected")
      ->required();
  evaluate->add_option("--judge", judge_name, "Judge mode: rules or llm");
  add_merge_options(evaluate, eval_common);
  evaluate->add_option("--format", format_name, "Report format: json, csv, or markdown");
  evaluate->add_option("--out", out_path, "Write the report here instead of stdout");
  evaluate->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);
  evaluate->add_option("--header-threshold", judge_config.header_similarity_threshold,
                       "Similarity each header cell must reach for the headers criterion")
      ->check(CLI::Range(0.0, 1.0));
  evaluate->add_option("--llm-endpoint", judge_config.llm_endpoint,
                       "Chat-completion endpoint URL for --judge llm");
  evaluate->add_option("--llm-model", judge_config.llm_model, "Model id for --judge llm");
  evaluate->add_option("--cache-dir", judge_config.cache_dir, "Disk cache for judge responses");
  evaluate->add_option("--api-key-env", judge_config.api_key_env,
                       "Environment variable holding the API key");

  // score
  std::string pred_path;
  std::string gold_path;
  CommonOptions score_common;
  double score_header_threshold = 0.75;
  CLI::App* score = app.add_subcommand("score", "Score one prediction against one reference");
  score->add_option("--pred", pred_path, "Predicted Markdown file")->required();
  score->add_option("--gold", gold_path, "Reference Markdown file")->required();
  add_merge_options(score, score_common);
  score->add_option("--header-threshold", score_header_threshold,
                    "Similarity each header cell must reach for the headers criterion")
      ->check(CLI::Range(0.0, 1.0));

  // inspect
  std::string inspect_path;
  CLI::App* inspect = app.add_subcommand("inspect", "Show isolated tables and diagnostics");
  inspect->add_option("--file", inspect_path, "Markdown file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (evaluate->parsed()) {
      return run_evaluate(dataset_path, judge_name, eval_common, format_name, out_path,
                          parallelism, judge_config);
    }
    if (score->parsed()) {
      return run_score(pred_path, gold_path, score_common, score_header_threshold);
    }
    if (inspect->parsed()) {
      return run_inspect(inspect_path);
    }
  } catch (const mdteds::DatasetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
