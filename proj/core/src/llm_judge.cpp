#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "mdteds/llm_judge.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <optional>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "mdteds/errors.hpp"

namespace mdteds {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string_view judge_prompt_template() {
  // {predicted} and {gold} are the substitution slots; {{ and }} render as
  // literal braces. Kept as one literal per line: several lines carry a
  // trailing space, and the exact bytes participate in the cache key.
  static constexpr std::string_view kTemplate =
      "You are an expert Markdown evaluator for financial statement pages. Assess \n"
      "the 'Actual Output' against the 'Expected Output' based on the rules below.\n"
      "\n"
      "Return:\n"
      "- \"criteria\": A dictionary with keys for each criterion and boolean values \n"
      "(True if met, False if not).\n"
      "\n"
      "---\n"
      "\n"
      "**Evaluation Criteria for Markdown Documents:**\n"
      "\n"
      "1. **Correct Row Count**: All tables in the Actual Output have the same \n"
      "number of rows as in the Expected Output.\n"
      "2. **Correct Column Count**: All tables in the Actual Output have the same \n"
      "number of columns as in the Expected Output.\n"
      "3. **Semantically Accurate Headers**: All table headers in the\n"
      "Actual Output convey the same meaning as those in the Expected Output \n"
      "(minor wording differences are acceptable if the intent is preserved).\n"
      "4. **Correct Item Order**: All table items and cell values in the Actual \n"
      "Output maintain the same order as in the Expected Output without shifts or \n"
      "misplacements.\n"
      "5. **Valid Markdown Formatting**: The Actual Output uses correct Markdown \n"
      "syntax (e.g., proper table structure, header syntax) consistent with the \n"
      "Expected Output.\n"
      "\n"
      "---\n"
      "\n"
      "Test Case:\n"
      "Actual Output:\n"
      "{predicted}\n"
      "\n"
      "Expected Output:\n"
      "{gold}\n"
      "\n"
      "---\n"
      "**Example Response (LLM must follow this strict format):**\n"
      "{{\n"
      "    \"criteria\": {{\n"
      "        \"Correct Row Count\": false,\n"
      "        \"Correct Column Count\": true,\n"
      "        \"Semantically Accurate Headers\": false,\n"
      "        \"Correct Item Order\": true,\n"
      "        \"Valid Markdown Formatting\": true,\n"
      "    }}\n"
      "}}\n";
  return kTemplate;
}

std::string render_judge_prompt(std::string_view predicted, std::string_view gold) {
  const std::string_view tpl = judge_prompt_template();
  std::string out;
  out.reserve(tpl.size() + predicted.size() + gold.size());
  std::size_t i = 0;
  while (i < tpl.size()) {
    const char c = tpl[i];
    if (c == '{') {
      if (tpl.substr(i, 2) == "{{") {
        out.push_back('{');
        i += 2;
        continue;
      }
      if (tpl.substr(i, 11) == "{predicted}") {
        out.append(predicted);
        i += 11;
        continue;
      }
      if (tpl.substr(i, 6) == "{gold}") {
        out.append(gold);
        i += 6;
        continue;
      }
    }
    if (c == '}' && tpl.substr(i, 2) == "}}") {
      out.push_back('}');
      i += 2;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(static_cast<std::size_t>(length) * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0F]);
  }
  return out;
}

// Drops commas that directly precede a closing brace/bracket, outside
// strings; the judge's documented example format carries one.
std::string strip_trailing_commas(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      out.push_back(c);
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      out.push_back(c);
      continue;
    }
    if (c == ',') {
      std::size_t k = i + 1;
      while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\n' ||
                                 text[k] == '\r')) {
        ++k;
      }
      if (k < text.size() && (text[k] == '}' || text[k] == ']')) continue;
    }
    out.push_back(c);
  }
  return out;
}

ordered_json try_parse(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    j = ordered_json::parse(strip_trailing_commas(text), nullptr, false);
  }
  return j;
}

// Balanced-brace extraction that respects JSON strings.
std::string_view balanced_object(std::string_view text, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (depth == 0) return text.substr(open, i - open + 1);
    }
  }
  return {};
}

std::optional<CriteriaVerdict> verdict_from_criteria(const ordered_json& criteria) {
  if (!criteria.is_object() || criteria.size() != kCriteriaKeys.size()) return std::nullopt;
  CriteriaVerdict verdict;
  bool* fields[] = {&verdict.row_count, &verdict.column_count, &verdict.headers,
                    &verdict.item_order, &verdict.formatting};
  for (std::size_t i = 0; i < kCriteriaKeys.size(); ++i) {
    const auto it = criteria.find(std::string(kCriteriaKeys[i]));
    if (it == criteria.end() || !it->is_boolean()) return std::nullopt;
    *fields[i] = it->get<bool>();
  }
  return verdict;
}

std::optional<CriteriaVerdict> scan_for_verdict(std::string_view text) {
  std::size_t pos = text.find('{');
  while (pos != std::string_view::npos) {
    const std::string_view candidate = balanced_object(text, pos);
    if (!candidate.empty()) {
      const ordered_json j = try_parse(candidate);
      if (j.is_object() && j.contains("criteria")) {
        if (auto verdict = verdict_from_criteria(j["criteria"])) return verdict;
      }
    }
    pos = text.find('{', pos + 1);
  }
  return std::nullopt;
}

}  // namespace

CriteriaVerdict parse_judge_response(const std::string& text) {
  // Chat-completion envelope: scan the first choice's message content.
  const ordered_json envelope = try_parse(text);
  if (envelope.is_object() && envelope.contains("choices") && envelope["choices"].is_array() &&
      !envelope["choices"].empty()) {
    const ordered_json& first = envelope["choices"][0];
    if (first.contains("message") && first["message"].contains("content") &&
        first["message"]["content"].is_string()) {
      const std::string content = first["message"]["content"].get<std::string>();
      if (auto verdict = scan_for_verdict(content)) return *verdict;
      throw RecordError("judge response invalid", text);
    }
  }
  if (auto verdict = scan_for_verdict(text)) return *verdict;
  throw RecordError("judge response invalid", text);
}

std::string judge_cache_key(std::string_view predicted, std::string_view gold,
                            std::string_view model) {
  std::string material;
  material.reserve(kJudgePromptVersion.size() + predicted.size() + gold.size() + model.size() + 3);
  material.append(kJudgePromptVersion);
  material.push_back('\x1f');
  material.append(predicted);
  material.push_back('\x1f');
  material.append(gold);
  material.push_back('\x1f');
  material.append(model);
  return sha256_hex(material);
}

namespace {

// Runtime-sized counting semaphore for the in-flight request cap.
class RequestSlots {
 public:
  explicit RequestSlots(int count) : available_(count < 1 ? 1 : count) {}

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [this] { return available_ > 0; });
    --available_;
  }
  void release() {
    {
      std::lock_guard lock(mutex_);
      ++available_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int available_;
};

struct SlotGuard {
  explicit SlotGuard(RequestSlots& slots) : slots_(slots) { slots_.acquire(); }
  ~SlotGuard() { slots_.release(); }
  RequestSlots& slots_;
};

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse post(const std::string& url,
                    const std::vector<std::pair<std::string, std::string>>& headers,
                    const std::string& body, std::chrono::milliseconds timeout) override {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
      throw RecordError("judge unavailable", "invalid endpoint URL: " + url);
    }
    const std::size_t path_start = url.find('/', scheme_end + 3);
    const std::string base = path_start == std::string::npos ? url : url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers request_headers;
    for (const auto& [name, value] : headers) request_headers.emplace(name, value);

    auto result = client.Post(path, request_headers, body, "application/json");
    if (!result) {
      throw RecordError("judge unavailable", httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
  }
};

}  // namespace

std::shared_ptr<HttpTransport> make_default_transport() {
  return std::make_shared<HttplibTransport>();
}

struct LlmJudge::Impl {
  JudgeConfig config;
  std::shared_ptr<HttpTransport> transport;
  RequestSlots slots;

  Impl(JudgeConfig cfg, std::shared_ptr<HttpTransport> tr)
      : config(std::move(cfg)),
        transport(tr ? std::move(tr) : make_default_transport()),
        slots(config.max_concurrent_requests) {}

  std::filesystem::path cache_path(const std::string& key) const {
    return std::filesystem::path(config.cache_dir) / (key + ".json");
  }

  std::optional<CriteriaVerdict> load_cached(const std::string& key) const {
    if (config.cache_dir.empty()) return std::nullopt;
    std::ifstream in(cache_path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("verdict")) return std::nullopt;
    return verdict_from_criteria(j["verdict"]);
  }

  void store_cached(const std::string& key, const CriteriaVerdict& verdict,
                    const std::string& raw_response) const {
    if (config.cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(config.cache_dir, ec);

    ordered_json entry;
    entry["request_hash"] = key;
    entry["model"] = config.llm_model;
    ordered_json v;
    v[std::string(kCriteriaKeys[0])] = verdict.row_count;
    v[std::string(kCriteriaKeys[1])] = verdict.column_count;
    v[std::string(kCriteriaKeys[2])] = verdict.headers;
    v[std::string(kCriteriaKeys[3])] = verdict.item_order;
    v[std::string(kCriteriaKeys[4])] = verdict.formatting;
    entry["verdict"] = std::move(v);
    entry["raw_response"] = raw_response;
    entry["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();

    // Atomic per record: write to a temp file, then rename into place.
    const std::filesystem::path target = cache_path(key);
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      out << entry.dump(2) << '\n';
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) std::filesystem::remove(temp, ec);
  }

  HttpResponse post_with_retries(const std::string& body) {
    std::vector<std::pair<std::string, std::string>> headers;
    if (!config.api_key_env.empty()) {
      if (const char* key = std::getenv(config.api_key_env.c_str());
          key != nullptr && key[0] != '\0') {
        headers.emplace_back("Authorization", std::string("Bearer ") + key);
      }
    }

    const int attempts = config.max_retries < 1 ? 1 : config.max_retries;
    std::string last_failure;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(200) * (1 << (attempt - 1)));
      }
      try {
        HttpResponse response =
            transport->post(config.llm_endpoint, headers, body, config.request_timeout);
        if (response.status == 200) return response;
        last_failure = "HTTP " + std::to_string(response.status);
        // Client errors are deterministic; do not retry them.
        if (response.status != 429 && response.status < 500) break;
      } catch (const RecordError& e) {
        last_failure = e.detail.empty() ? e.what() : e.detail;
      }
    }
    throw RecordError("judge unavailable", last_failure);
  }
};

LlmJudge::LlmJudge(JudgeConfig config, std::shared_ptr<HttpTransport> transport)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(transport))) {}

LlmJudge::~LlmJudge() = default;

CriteriaVerdict LlmJudge::judge(std::string_view predicted, std::string_view gold) {
  if (impl_->config.llm_endpoint.empty() || impl_->config.llm_model.empty()) {
    throw RecordError("judge unavailable", "llm mode requires llm_endpoint and llm_model");
  }
  const std::string key = judge_cache_key(predicted, gold, impl_->config.llm_model);
  if (auto cached = impl_->load_cached(key)) return *cached;

  ordered_json request;
  request["model"] = impl_->config.llm_model;
  request["messages"] = ordered_json::array(
      {ordered_json{{"role", "user"}, {"content", render_judge_prompt(predicted, gold)}}});

  HttpResponse response;
  {
    SlotGuard guard(impl_->slots);
    response = impl_->post_with_retries(request.dump());
  }
  const CriteriaVerdict verdict = parse_judge_response(response.body);
  impl_->store_cached(key, verdict, response.body);
  return verdict;
}

}  // namespace mdteds
