#include "mdteds/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "mdteds/errors.hpp"
#include "mdteds/llm_judge.hpp"

namespace mdteds {

namespace {
using ordered_json = nlohmann::ordered_json;

double percent(std::size_t hits, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(hits) / static_cast<double>(total);
}

PassRates rates_for(const std::vector<const RecordOutcome*>& outcomes) {
  PassRates rates;
  rates.records = outcomes.size();
  std::size_t row = 0, col = 0, hdr = 0, ord = 0, fmt = 0;
  double teds_sum = 0.0;
  for (const RecordOutcome* out : outcomes) {
    row += out->verdict.row_count ? 1 : 0;
    col += out->verdict.column_count ? 1 : 0;
    hdr += out->verdict.headers ? 1 : 0;
    ord += out->verdict.item_order ? 1 : 0;
    fmt += out->verdict.formatting ? 1 : 0;
    teds_sum += out->teds;
  }
  const std::size_t n = outcomes.size();
  rates.row_count = percent(row, n);
  rates.column_count = percent(col, n);
  rates.headers = percent(hdr, n);
  rates.item_order = percent(ord, n);
  rates.formatting = percent(fmt, n);
  rates.overall = (rates.row_count + rates.column_count + rates.headers + rates.item_order +
                   rates.formatting) /
                  5.0;
  rates.mean_teds = n == 0 ? 0.0 : 100.0 * teds_sum / static_cast<double>(n);
  return rates;
}

}  // namespace

AggregateReport aggregate(std::vector<RecordOutcome> outcomes,
                          std::chrono::duration<double> wall_time) {
  AggregateReport report;
  report.per_record = std::move(outcomes);
  report.wall_time = wall_time;

  std::vector<const RecordOutcome*> all;
  all.reserve(report.per_record.size());
  std::map<Section, std::vector<const RecordOutcome*>> sections;
  for (const RecordOutcome& out : report.per_record) {
    all.push_back(&out);
    if (out.section) sections[*out.section].push_back(&out);
  }
  report.summary = rates_for(all);
  for (const auto& [section, members] : sections) {
    report.by_section.emplace(section, rates_for(members));
  }
  return report;
}

AggregateReport run_evaluation(const std::vector<EvalRecord>& records,
                               const JudgeConfig& judge_config, const MergePolicy& merge_policy,
                               int parallelism) {
  if (records.empty()) {
    throw DatasetError("dataset contains no records");
  }
  const auto start = std::chrono::steady_clock::now();

  std::unique_ptr<LlmJudge> llm;
  if (judge_config.mode == JudgeMode::llm) {
    llm = std::make_unique<LlmJudge>(judge_config);
  }

  std::vector<RecordOutcome> outcomes(records.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex log_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= records.size()) break;
      const EvalRecord& record = records[i];
      RecordOutcome& out = outcomes[i];
      out.id = record.id;
      out.section = record.section;
      try {
        const RecordEvaluation ev =
            evaluate_record(record.predicted, record.expected, merge_policy,
                            judge_config.header_similarity_threshold);
        out.teds = ev.score.document_teds;
        out.verdict = llm ? llm->judge(record.predicted, record.expected) : ev.verdict;
      } catch (const RecordError& e) {
        out.verdict = CriteriaVerdict{};
        out.teds = 0.0;
        out.error = e.what();
      } catch (const std::exception& e) {
        out.verdict = CriteriaVerdict{};
        out.teds = 0.0;
        out.error = e.what();
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      std::lock_guard lock(log_mutex);
      std::fprintf(stderr, "[%zu/%zu] %s%s\n", finished, records.size(), record.id.c_str(),
                   out.error ? (" error: " + *out.error).c_str() : "");
    }
  };

  const std::size_t workers = static_cast<std::size_t>(parallelism < 1 ? 1 : parallelism);
  std::vector<std::thread> pool;
  pool.reserve(std::min(workers, records.size()));
  for (std::size_t t = 0; t < std::min(workers, records.size()); ++t) {
    pool.emplace_back(worker);
  }
  for (std::thread& thread : pool) thread.join();

  const auto elapsed = std::chrono::steady_clock::now() - start;
  return aggregate(std::move(outcomes),
                   std::chrono::duration_cast<std::chrono::duration<double>>(elapsed));
}

namespace {

double round2(double value) { return std::round(value * 100.0) / 100.0; }

std::string format2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

ordered_json rates_json(const PassRates& rates) {
  ordered_json j;
  ordered_json pass;
  pass[std::string(kCriteriaKeys[0])] = round2(rates.row_count);
  pass[std::string(kCriteriaKeys[1])] = round2(rates.column_count);
  pass[std::string(kCriteriaKeys[2])] = round2(rates.headers);
  pass[std::string(kCriteriaKeys[3])] = round2(rates.item_order);
  pass[std::string(kCriteriaKeys[4])] = round2(rates.formatting);
  j["pass_rates"] = std::move(pass);
  j["overall_accuracy"] = round2(rates.overall);
  j["mean_teds"] = round2(rates.mean_teds);
  j["records"] = rates.records;
  return j;
}

std::string render_json(const AggregateReport& report) {
  ordered_json j;
  j["summary"] = rates_json(report.summary);
  if (!report.by_section.empty()) {
    ordered_json sections;
    for (const auto& [section, rates] : report.by_section) {
      sections[std::string(to_string(section))] = rates_json(rates);
    }
    j["sections"] = std::move(sections);
  }
  ordered_json records = ordered_json::array();
  for (const RecordOutcome& out : report.per_record) {
    ordered_json r;
    r["id"] = out.id;
    ordered_json criteria;
    criteria[std::string(kCriteriaKeys[0])] = out.verdict.row_count;
    criteria[std::string(kCriteriaKeys[1])] = out.verdict.column_count;
    criteria[std::string(kCriteriaKeys[2])] = out.verdict.headers;
    criteria[std::string(kCriteriaKeys[3])] = out.verdict.item_order;
    criteria[std::string(kCriteriaKeys[4])] = out.verdict.formatting;
    r["criteria"] = std::move(criteria);
    r["teds"] = round2(100.0 * out.teds);
    if (out.section) r["section"] = std::string(to_string(*out.section));
    if (out.error) r["error"] = *out.error;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  j["wall_time_seconds"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

const char* bool_text(bool value) { return value ? "true" : "false"; }

std::string render_csv(const AggregateReport& report) {
  std::string out =
      "id,row_count,column_count,headers,item_order,formatting,overall,teds,error\n";
  for (const RecordOutcome& r : report.per_record) {
    out += csv_escape(r.id);
    out += ',';
    out += bool_text(r.verdict.row_count);
    out += ',';
    out += bool_text(r.verdict.column_count);
    out += ',';
    out += bool_text(r.verdict.headers);
    out += ',';
    out += bool_text(r.verdict.item_order);
    out += ',';
    out += bool_text(r.verdict.formatting);
    out += ",,";
    out += format2(100.0 * r.teds);
    out += ',';
    out += r.error ? csv_escape(*r.error) : "";
    out += '\n';
  }
  const PassRates& s = report.summary;
  out += "summary," + format2(s.row_count) + ',' + format2(s.column_count) + ',' +
         format2(s.headers) + ',' + format2(s.item_order) + ',' + format2(s.formatting) + ',' +
         format2(s.overall) + ',' + format2(s.mean_teds) + ",\n";
  return out;
}

void append_rates_row(std::string& out, const std::string& label, const PassRates& rates) {
  out += "| " + label + " | " + format2(rates.row_count) + " | " + format2(rates.column_count) +
         " | " + format2(rates.headers) + " | " + format2(rates.item_order) + " | " +
         format2(rates.formatting) + " | " + format2(rates.overall) + " | " +
         format2(rates.mean_teds) + " |\n";
}

std::string render_markdown(const AggregateReport& report) {
  std::string out = "# Evaluation Report\n\n";
  out += "| Scope | Row (%) | Col. (%) | Headers (%) | Order (%) | Format (%) | Overall (%) | "
         "TEDS (%) |\n";
  out += "| :--- | ---: | ---: | ---: | ---: | ---: | ---: | ---: |\n";
  append_rates_row(out, "all", report.summary);
  for (const auto& [section, rates] : report.by_section) {
    append_rates_row(out, std::string(to_string(section)), rates);
  }
  out += "\n## Records\n\n";
  out += "| ID | Row | Col. | Headers | Order | Format | TEDS (%) | Error |\n";
  out += "| :--- | :--- | :--- | :--- | :--- | :--- | ---: | :--- |\n";
  for (const RecordOutcome& r : report.per_record) {
    out += "| " + r.id + " | " + bool_text(r.verdict.row_count) + " | " +
           bool_text(r.verdict.column_count) + " | " + bool_text(r.verdict.headers) + " | " +
           bool_text(r.verdict.item_order) + " | " + bool_text(r.verdict.formatting) + " | " +
           format2(100.0 * r.teds) + " | " + (r.error ? *r.error : "") + " |\n";
  }
  char wall[64];
  std::snprintf(wall, sizeof(wall), "\nWall time: %.3f s\n", report.wall_time.count());
  out += wall;
  return out;
}

}  // namespace

std::optional<ReportFormat> report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown") return ReportFormat::markdown;
  return std::nullopt;
}

std::string render_report(const AggregateReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_json(report);
    case ReportFormat::csv: return render_csv(report);
    case ReportFormat::markdown: return render_markdown(report);
  }
  return {};
}

}  // namespace mdteds
