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

#include "efparse/llm_gateway.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include "efparse/lexicon.hpp"

namespace efparse {
namespace {

using json = nlohmann::json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      const char n = s[i + 1];
      if (n == 'n') { out.push_back('\n'); ++i; continue; }
      if (n == 't') { out.push_back('\t'); ++i; continue; }
      if (n == '\\') { out.push_back('\\'); ++i; continue; }
    }
    out.push_back(s[i]);
  }
  return out;
}

QueryKind parse_kind(std::string_view s) {
  if (s == "extract") return QueryKind::Extract;
  if (s == "merge") return QueryKind::Merge;
  if (s == "confirm") return QueryKind::Confirm;
  throw std::invalid_argument("unknown mock query kind '" + std::string(s) + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::string, std::string> split_prompt(const std::string& text) {
  const auto lines = split_lines(text);
  std::string system;
  std::string user;
  bool in_user = false;
  for (auto line : lines) {
    if (!in_user && trim(line) == "---") {
      in_user = true;
      continue;
    }
    std::string& dst = in_user ? user : system;
    dst.append(line);
    dst.push_back('\n');
  }
  if (!in_user) std::swap(system, user);
  return {std::string(trim(system)), std::string(trim(user))};
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string_view to_string(QueryKind kind) noexcept {
  switch (kind) {
    case QueryKind::Extract: return "extract";
    case QueryKind::Merge: return "merge";
    case QueryKind::Confirm: return "confirm";
  }
  return "?";
}

std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string render_prompt(std::string_view text, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      const auto close = text.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string key(text.substr(i + 1, close - i - 1));
        if (auto it = values.find(key); it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(text[i++]);
  }
  return out;
}

// --- mock ------------------------------------------------------------------

MockScript MockScript::parse(std::istream& in) {
  MockScript script;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto p1 = t.find('|');
    const auto p2 = p1 == std::string_view::npos ? p1 : t.find('|', p1 + 1);
    if (p2 == std::string_view::npos) {
      throw std::invalid_argument("mock script line " + std::to_string(lineno) +
                                  ": expected 'kind | matcher | response'");
    }
    MockRule rule;
    rule.kind = parse_kind(trim(t.substr(0, p1)));
    std::string_view matcher = trim(t.substr(p1 + 1, p2 - p1 - 1));
    rule.is_default = matcher == "*";
    if (matcher.starts_with("prompt:")) {
      rule.on_prompt = true;
      matcher.remove_prefix(7);
    }
    rule.matcher = std::string(matcher);
    rule.response = unescape(trim(t.substr(p2 + 1)));
    script.rules_.push_back(std::move(rule));
  }
  for (auto kind : {QueryKind::Extract, QueryKind::Merge, QueryKind::Confirm}) {
    bool found = false;
    for (const auto& r : script.rules_) found = found || (r.kind == kind && r.is_default);
    if (!found) {
      throw std::invalid_argument("mock script lacks a default rule for '" + std::string(to_string(kind)) + "'");
    }
  }
  return script;
}

MockScript MockScript::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

MockScript MockScript::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read mock script " + file.string());
  return parse(in);
}

MockScript MockScript::defaults() {
  return parse("extract | * | {log}\nmerge | * | {left}\nconfirm | * |\n");
}

const MockRule& MockScript::resolve(const ChatRequest& request) const {
  const std::string prompt = request.system + "\n" + request.user;
  const MockRule* fallback = nullptr;
  for (const auto& rule : rules_) {
    if (rule.kind != request.kind) continue;
    if (rule.is_default) {
      if (!fallback) fallback = &rule;
      continue;
    }
    const std::string& haystack = rule.on_prompt ? prompt : request.subject;
    if (haystack.find(rule.matcher) != std::string::npos) return rule;
  }
  return *fallback;
}

std::map<std::string, std::string> MockBackend::placeholders(const ChatRequest& request) {
  std::map<std::string, std::string> values;
  const auto lines = split_lines(request.subject);
  switch (request.kind) {
    case QueryKind::Extract:
      values["log"] = request.subject;
      break;
    case QueryKind::Merge:
      for (auto line : lines) {
        if (line.starts_with("left: ")) values["left"] = std::string(line.substr(6));
        if (line.starts_with("right: ")) values["right"] = std::string(line.substr(7));
      }
      break;
    case QueryKind::Confirm:
      for (auto line : lines) {
        if (line.starts_with("log: ")) values["log"] = std::string(line.substr(5));
        if (line.starts_with("suspects: ")) values["suspects"] = std::string(line.substr(10));
      }
      break;
  }
  return values;
}

std::string MockBackend::complete(const ChatRequest& request) {
  const MockRule& rule = script_.resolve(request);
  if (rule.response == "!error") throw GatewayError("mock backend: scripted failure");
  if (rule.response == "!timeout") throw GatewayError("mock backend: scripted timeout");
  std::string response = render_prompt(rule.response, placeholders(request));
  transcript_.push_back({request.kind, request.system + "\n" + request.user, response});
  return response;
}

std::uint64_t MockBackend::transcript_hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& e : transcript_) {
    mix(to_string(e.kind));
    mix(e.prompt);
    mix(e.response);
  }
  return h;
}

// --- http ------------------------------------------------------------------

HttpBackend::HttpBackend(GatewayConfig config, std::string api_key)
    : config_(std::move(config)), api_key_(std::move(api_key)) {
  const std::string& url = config_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw GatewayError("endpoint URL lacks a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw GatewayError("unsupported endpoint scheme: " + scheme);
}

std::string HttpBackend::request_body(const GatewayConfig& config, const ChatRequest& request) {
  json body;
  body["model"] = config.model;
  body["temperature"] = config.temperature;
  body["messages"] = json::array();
  if (!request.system.empty()) body["messages"].push_back({{"role", "system"}, {"content", request.system}});
  body["messages"].push_back({{"role", "user"}, {"content", request.user}});
  return body.dump();
}

std::string HttpBackend::parse_response(std::string_view body) {
  const json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw GatewayError("backend returned malformed JSON");
  const auto choices = doc.find("choices");
  if (choices == doc.end() || !choices->is_array() || choices->empty()) {
    throw GatewayError("backend response has no choices");
  }
  const json& first = choices->front();
  if (first.contains("message") && first["message"].contains("content") && first["message"]["content"].is_string()) {
    return first["message"]["content"].get<std::string>();
  }
  if (first.contains("text") && first["text"].is_string()) return first["text"].get<std::string>();
  throw GatewayError("backend response has no message content");
}

std::string HttpBackend::complete(const ChatRequest& request) {
  httplib::Client client(scheme_host_port_);
  const auto secs = static_cast<time_t>(config_.timeout_seconds);
  const auto usecs = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  const std::string body = request_body(config_, request);

  std::string last_error = "no attempt made";
  const int attempts = 1 + std::max(0, config_.max_retries);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(100 * attempt));
    ++attempts_;
    auto res = client.Post(path_, headers, body, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return parse_response(res->body);
    last_error = "HTTP status " + std::to_string(res->status);
    // Client errors other than rate limiting will not improve on retry.
    if (res->status >= 400 && res->status < 500 && res->status != 408 && res->status != 429) break;
  }
  throw GatewayError("chat-completions request failed: " + last_error);
}

// --- prompts and gateway -----------------------------------------------------

PromptSet PromptSet::load(const std::filesystem::path& dir) {
  PromptSet p;
  std::tie(p.extract_system, p.extract_user) = split_prompt(read_file(dir / "extract.txt"));
  std::tie(p.merge_system, p.merge_user) = split_prompt(read_file(dir / "merge.txt"));
  std::tie(p.confirm_system, p.confirm_user) = split_prompt(read_file(dir / "confirm.txt"));
  return p;
}

PromptSet PromptSet::load_default() { return load(data_dir() / "prompts"); }

Gateway::Gateway(std::unique_ptr<Backend> backend, PromptSet prompts)
    : backend_(std::move(backend)), prompts_(std::move(prompts)) {}

std::unique_ptr<Gateway> Gateway::from_config(const GatewayConfig& config) {
  PromptSet prompts = config.prompt_dir.empty() ? PromptSet::load_default() : PromptSet::load(config.prompt_dir);
  std::unique_ptr<Backend> backend;
  if (config.backend == GatewayConfig::Kind::Mock) {
    backend = std::make_unique<MockBackend>(config.mock_script.empty() ? MockScript::defaults()
                                                                        : MockScript::load(config.mock_script));
  } else {
    const char* key = std::getenv(config.api_key_env.c_str());
    if (!key || !*key) {
      throw GatewayError("HTTP backend needs an API key in environment variable " + config.api_key_env);
    }
    backend = std::make_unique<HttpBackend>(config, key);
  }
  return std::make_unique<Gateway>(std::move(backend), std::move(prompts));
}

std::string Gateway::call(const ChatRequest& request) {
  ++calls_;
  try {
    return backend_->complete(request);
  } catch (const GatewayError&) {
    ++failures_;
    throw;
  }
}

std::string Gateway::extract_template(std::string_view target, const std::vector<std::string>& exemplars) {
  ChatRequest req;
  req.kind = QueryKind::Extract;
  req.subject = std::string(target);
  std::string listed;
  for (const auto& e : exemplars) listed += "- " + e + "\n";
  if (listed.empty()) listed = "(none)\n";
  req.system = prompts_.extract_system;
  req.user = render_prompt(prompts_.extract_user, {{"log", req.subject}, {"exemplars", std::string(trim(listed))}});

  const std::string response = call(req);
  std::string_view best;
  for (auto line : split_lines(response)) {
    line = trim(line);
    if (line.find(kWildcard) != std::string_view::npos) return std::string(line);
    if (line.size() > best.size()) best = line;
  }
  if (best.empty()) throw GatewayError("backend returned an empty template");
  return std::string(best);
}

std::string Gateway::semantic_merge(const TokenSeq& left, const TokenSeq& right, std::string_view context_a,
                                    std::string_view context_b) {
  ChatRequest req;
  req.kind = QueryKind::Merge;
  req.subject = "left: " + join_tokens(left) + "\nright: " + join_tokens(right);
  req.system = prompts_.merge_system;
  req.user = render_prompt(prompts_.merge_user, {{"left", join_tokens(left)},
                                                 {"right", join_tokens(right)},
                                                 {"template_a", std::string(context_a)},
                                                 {"template_b", std::string(context_b)}});
  const std::string response = call(req);
  for (auto line : split_lines(response)) {
    line = trim(line);
    if (!line.empty()) return std::string(line);
  }
  return {};
}

std::vector<std::string> Gateway::confirm_variables(std::string_view log, std::string_view rendered_template,
                                                    const std::vector<std::string>& suspects) {
  if (suspects.empty()) return {};
  ChatRequest req;
  req.kind = QueryKind::Confirm;
  const std::string listed = join(suspects, ", ");
  req.subject = "log: " + std::string(log) + "\nsuspects: " + listed;
  req.system = prompts_.confirm_system;
  req.user = render_prompt(prompts_.confirm_user, {{"log", std::string(log)},
                                                   {"template", std::string(rendered_template)},
                                                   {"suspects", listed}});
  std::string response;
  try {
    response = call(req);
  } catch (const GatewayError&) {
    return {};
  }
  std::vector<std::string> named;
  for (auto line : split_lines(response)) {
    if (const auto whole = trim(line); !whole.empty()) named.emplace_back(whole);
    std::size_t start = 0;
    while (start <= line.size()) {
      auto comma = line.find(',', start);
      if (comma == std::string_view::npos) comma = line.size();
      const auto item = trim(line.substr(start, comma - start));
      if (!item.empty()) named.emplace_back(item);
      start = comma + 1;
    }
  }
  std::vector<std::string> confirmed;
  for (const auto& s : suspects) {
    const bool listed_back = std::find(named.begin(), named.end(), s) != named.end();
    if (listed_back && std::find(confirmed.begin(), confirmed.end(), s) == confirmed.end()) confirmed.push_back(s);
  }
  return confirmed;
}

}  // namespace efparse
