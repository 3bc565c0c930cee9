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

#include "efparse/token.hpp"

#include <algorithm>
#include <stdexcept>

#include "efparse/match.hpp"

namespace efparse {
namespace {

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

TokenSeq tokenize(std::string_view raw) {
  TokenSeq out;
  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    while (i < n && is_space(raw[i])) ++i;
    const std::size_t begin = i;
    while (i < n && !is_space(raw[i])) ++i;
    if (i > begin) out.emplace_back(raw.substr(begin, i - begin));
  }
  return out;
}

std::string join_tokens(const TokenSeq& tokens) {
  std::string out;
  std::size_t total = tokens.empty() ? 0 : tokens.size() - 1;
  for (const auto& t : tokens) total += t.size();
  out.reserve(total);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string normalize_whitespace(std::string_view raw) { return join_tokens(tokenize(raw)); }

std::size_t count_wildcards(std::string_view text) noexcept {
  std::size_t n = 0;
  for (auto pos = text.find(kWildcard); pos != std::string_view::npos;
       pos = text.find(kWildcard, pos + kWildcard.size())) {
    ++n;
  }
  return n;
}

Token Token::wildcard() { return Token(std::string(kWildcard), true); }

Token Token::constant(std::string text) {
  if (text.empty()) throw std::invalid_argument("constant token must not be empty");
  if (text == kWildcard) throw std::invalid_argument("constant token must not be the wildcard literal");
  if (std::any_of(text.begin(), text.end(), is_space)) {
    throw std::invalid_argument("constant token must not contain whitespace: '" + text + "'");
  }
  return Token(std::move(text), false);
}

Token Token::from_text(std::string text) {
  if (text == kWildcard) return wildcard();
  return constant(std::move(text));
}

bool Token::has_wildcard() const noexcept {
  return wildcard_ || text_.find(kWildcard) != std::string::npos;
}

LogRecord::LogRecord(std::uint64_t id, std::string line)
    : line_id(id), raw(std::move(line)), tokens(tokenize(raw)), normalized(join_tokens(tokens)) {}

Template::Template(std::vector<Token> tokens, std::size_t sample_capacity)
    : tokens_(std::move(tokens)), sample_capacity_(sample_capacity) {
  if (tokens_.empty()) throw std::invalid_argument("template needs at least one token");
}

Template Template::parse(std::string_view rendered, std::size_t sample_capacity) {
  std::vector<Token> tokens;
  for (auto& text : tokenize(rendered)) tokens.push_back(Token::from_text(std::move(text)));
  return Template(std::move(tokens), sample_capacity);
}

Template Template::from_log(const LogRecord& log, std::size_t sample_capacity) {
  std::vector<Token> tokens;
  tokens.reserve(log.tokens.size());
  for (const auto& text : log.tokens) tokens.push_back(Token::from_text(text));
  return Template(std::move(tokens), sample_capacity);
}

std::size_t Template::wildcard_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tokens_) n += t.is_wildcard() ? 1 : count_wildcards(t.text());
  return n;
}

std::string Template::render() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens_[i].text();
  }
  return out;
}

TokenSeq Template::token_texts() const {
  TokenSeq out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(t.text());
  return out;
}

bool Template::add_sample(const LogRecord& log) {
  if (samples_.size() >= sample_capacity_) return false;
  if (std::find(samples_.begin(), samples_.end(), log.raw) != samples_.end()) return false;
  if (!matches(*this, log)) return false;
  samples_.push_back(log.raw);
  return true;
}

bool Template::add_sample(std::string_view raw) { return add_sample(LogRecord(0, std::string(raw))); }

}  // namespace efparse
