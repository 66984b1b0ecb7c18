#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdteds/criteria.hpp"

namespace mdteds {

/// Participates in the cache key so template edits invalidate caches.
inline constexpr std::string_view kJudgePromptVersion = "1";

/// The versioned judge prompt template with {predicted} and {gold} slots.
std::string_view judge_prompt_template();

/// Substitutes the two slots; {{ and }} are literal-brace escapes.
std::string render_judge_prompt(std::string_view predicted, std::string_view gold);

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Blocking HTTP POST seam; tests inject recorders/stubs.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  /// Throws RecordError on connection failure or timeout.
  virtual HttpResponse post(const std::string& url,
                            const std::vector<std::pair<std::string, std::string>>& headers,
                            const std::string& body,
                            std::chrono::milliseconds timeout) = 0;
};

std::shared_ptr<HttpTransport> make_default_transport();

/// Extracts the verdict from a judge reply: the first top-level JSON object
/// carrying a "criteria" dictionary with exactly the five keys and boolean
/// values. Accepts chat-completion envelopes (scans the message content),
/// fenced code blocks, and trailing commas. Throws RecordError("judge
/// response invalid") with the raw text as detail otherwise.
CriteriaVerdict parse_judge_response(const std::string& text);

/// Hex digest over (prompt version, predicted, gold, model).
std::string judge_cache_key(std::string_view predicted, std::string_view gold,
                            std::string_view model);

/// Remote judge speaking the chat-completion protocol, with a disk cache
/// keyed by content hash. At most max_concurrent_requests are in flight;
/// cache writes are atomic (write-to-temp-then-rename). Cache hits perform
/// no network request.
class LlmJudge {
 public:
  explicit LlmJudge(JudgeConfig config, std::shared_ptr<HttpTransport> transport = nullptr);
  ~LlmJudge();

  LlmJudge(const LlmJudge&) = delete;
  LlmJudge& operator=(const LlmJudge&) = delete;

  /// Throws RecordError("judge unavailable") after bounded retries and
  /// RecordError("judge response invalid") on malformed replies.
  CriteriaVerdict judge(std::string_view predicted, std::string_view gold);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mdteds
