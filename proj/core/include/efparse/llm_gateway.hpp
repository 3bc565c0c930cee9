/*
 * Copyright 2026 The efparse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "efparse/token.hpp"

namespace efparse {

enum class QueryKind { Extract, Merge, Confirm };

std::string_view to_string(QueryKind kind) noexcept;

// Transport failure, timeout, or an unusable backend response.
class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChatRequest {
  QueryKind kind = QueryKind::Extract;
  std::string system;   // instruction
  std::string user;     // rendered prompt body
  std::string subject;  // the item under query, used by the mock matcher
};

class Backend {
 public:
  virtual ~Backend() = default;
  // Returns the raw completion text. Throws GatewayError on failure.
  virtual std::string complete(const ChatRequest& request) = 0;
};

struct GatewayConfig {
  enum class Kind { Http, Mock };

  Kind backend = Kind::Mock;
  std::string endpoint = "http://127.0.0.1:8000/v1/chat/completions";
  std::string model = "gemini-1.5-flash-8b";
  std::string api_key_env = "EFPARSE_API_KEY";
  double temperature = 0.0;
  double timeout_seconds = 30.0;
  int max_retries = 2;
  std::filesystem::path mock_script;
  // Defaults to data_dir() / "prompts" when empty.
  std::filesystem::path prompt_dir;
};

/// Line-oriented mock rules: `kind | matcher | response`.
///
/// kind is extract, merge or confirm. A matcher of `*` is the default for
/// its kind; `prompt:TEXT` matches TEXT anywhere in the full prompt; any
/// other matcher is a substring test against the query subject (the target
/// log, the segment pair, or the log plus suspects). The first matching rule
/// wins. Responses may use `\n` for newlines and the placeholders {log},
/// {left}, {right} and {suspects}; the responses `!error` and `!timeout`
/// make the call fail. Lines starting with `#` are comments.
struct MockRule {
  QueryKind kind = QueryKind::Extract;
  std::string matcher;
  std::string response;
  bool is_default = false;
  bool on_prompt = false;
};

class MockScript {
 public:
  // Throws std::invalid_argument on malformed rules or a kind without a
  // default rule.
  static MockScript parse(std::istream& in);
  static MockScript parse(std::string_view text);
  static MockScript load(const std::filesystem::path& file);
  // Echo-style defaults only: identity template, left segment, no suspects.
  static MockScript defaults();

  const std::vector<MockRule>& rules() const noexcept { return rules_; }
  const MockRule& resolve(const ChatRequest& request) const;

 private:
  std::vector<MockRule> rules_;
};

class MockBackend : public Backend {
 public:
  explicit MockBackend(MockScript script) : script_(std::move(script)) {}

  std::string complete(const ChatRequest& request) override;

  struct Exchange {
    QueryKind kind;
    std::string prompt;
    std::string response;
  };
  const std::vector<Exchange>& transcript() const noexcept { return transcript_; }
  // FNV-1a over the transcript; equal for equal query sequences.
  std::uint64_t transcript_hash() const noexcept;

  // Placeholders available to mock responses, keyed without braces.
  static std::map<std::string, std::string> placeholders(const ChatRequest& request);

 private:
  MockScript script_;
  std::vector<Exchange> transcript_;
};

/// Chat-completions client: POSTs {model, messages, temperature} as JSON and
/// reads choices[0].message.content.
class HttpBackend : public Backend {
 public:
  // Throws GatewayError when the endpoint URL cannot be parsed.
  explicit HttpBackend(GatewayConfig config, std::string api_key = {});

  std::string complete(const ChatRequest& request) override;

  // Transport attempts made so far, retries included.
  std::size_t attempts() const noexcept { return attempts_; }

  static std::string request_body(const GatewayConfig& config, const ChatRequest& request);
  // Throws GatewayError if the body is not a chat-completions response.
  static std::string parse_response(std::string_view body);

 private:
  GatewayConfig config_;
  std::string api_key_;
  std::string scheme_host_port_;
  std::string path_;
  std::size_t attempts_ = 0;
};

/// Prompt templates, one file per query kind. A line holding only `---`
/// separates the system instruction from the user message. Placeholders are
/// written {name}.
struct PromptSet {
  std::string extract_system;
  std::string extract_user;
  std::string merge_system;
  std::string merge_user;
  std::string confirm_system;
  std::string confirm_user;

  // Reads extract.txt, merge.txt and confirm.txt. Throws std::runtime_error
  // if one is missing.
  static PromptSet load(const std::filesystem::path& dir);
  static PromptSet load_default();
};

std::string render_prompt(std::string_view text, const std::map<std::string, std::string>& values);

class Gateway {
 public:
  Gateway(std::unique_ptr<Backend> backend, PromptSet prompts);

  // Builds a gateway from configuration. For the Http backend the API key is
  // read from the environment variable named by api_key_env; a missing key
  // throws GatewayError.
  static std::unique_ptr<Gateway> from_config(const GatewayConfig& config);

  // First response line holding "<*>", else the longest line. Throws
  // GatewayError on transport failure or an empty response.
  std::string extract_template(std::string_view target, const std::vector<std::string>& exemplars);
  // First non-empty response line. Throws GatewayError on transport failure.
  std::string semantic_merge(const TokenSeq& left, const TokenSeq& right, std::string_view context_a,
                             std::string_view context_b);
  // Suspects named in the response, in suspect order. Empty on failure.
  std::vector<std::string> confirm_variables(std::string_view log, std::string_view rendered_template,
                                             const std::vector<std::string>& suspects);

  std::size_t call_count() const noexcept { return calls_; }
  std::size_t failure_count() const noexcept { return failures_; }
  Backend& backend() noexcept { return *backend_; }

 private:
  std::string call(const ChatRequest& request);

  std::unique_ptr<Backend> backend_;
  PromptSet prompts_;
  std::size_t calls_ = 0;
  std::size_t failures_ = 0;
};

// Removes leading and trailing whitespace.
std::string_view trim(std::string_view s) noexcept;

}  // namespace efparse
