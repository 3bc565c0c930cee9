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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace efparse {

inline constexpr std::string_view kWildcard = "<*>";

using TokenSeq = std::vector<std::string>;

// Splits on runs of whitespace. Blank input yields an empty sequence.
TokenSeq tokenize(std::string_view raw);

// Joins tokens with single spaces.
std::string join_tokens(const TokenSeq& tokens);

// Whitespace-normalized form of a raw line: tokenize, then join.
std::string normalize_whitespace(std::string_view raw);

/// A template token: either the wildcard or a constant.
///
/// A constant may still embed "<*>" inside a larger token (for instance
/// "blk_<*>"); such a token is a constant for alignment purposes but is
/// treated as variable by the prefix tree and the matcher.
class Token {
 public:
  static Token wildcard();
  // Throws std::invalid_argument for empty text, whitespace, or "<*>".
  static Token constant(std::string text);
  // "<*>" becomes the wildcard, anything else a constant.
  static Token from_text(std::string text);

  bool is_wildcard() const noexcept { return wildcard_; }
  bool is_constant() const noexcept { return !wildcard_; }
  // True for the wildcard and for constants that embed "<*>".
  bool has_wildcard() const noexcept;
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Token& a, const Token& b) noexcept {
    return a.wildcard_ == b.wildcard_ && a.text_ == b.text_;
  }

 private:
  Token(std::string text, bool wildcard) : text_(std::move(text)), wildcard_(wildcard) {}

  std::string text_;
  bool wildcard_ = false;
};

struct TemplateId {
  std::uint64_t value = 0;

  constexpr bool valid() const noexcept { return value != 0; }
  friend constexpr auto operator<=>(TemplateId, TemplateId) = default;
};

struct LogRecord {
  LogRecord() = default;
  LogRecord(std::uint64_t line_id, std::string raw);

  std::uint64_t line_id = 0;
  std::string raw;
  TokenSeq tokens;
  // join_tokens(tokens); the string templates are matched against.
  std::string normalized;
};

class Template {
 public:
  static constexpr std::size_t kDefaultSampleCapacity = 3;

  Template() = default;
  // Throws std::invalid_argument when tokens is empty.
  explicit Template(std::vector<Token> tokens,
                    std::size_t sample_capacity = kDefaultSampleCapacity);

  // Parses a rendered template ("a <*> b"). Throws on blank text.
  static Template parse(std::string_view rendered,
                        std::size_t sample_capacity = kDefaultSampleCapacity);
  // The all-constant template spelling a log exactly.
  static Template from_log(const LogRecord& log,
                           std::size_t sample_capacity = kDefaultSampleCapacity);

  TemplateId id() const noexcept { return id_; }
  void set_id(TemplateId id) noexcept { id_ = id; }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  // Number of "<*>" occurrences, embedded ones included.
  std::size_t wildcard_count() const noexcept;
  std::string render() const;
  TokenSeq token_texts() const;

  const std::vector<std::string>& sample_logs() const noexcept { return samples_; }
  std::size_t sample_capacity() const noexcept { return sample_capacity_; }
  // Keeps a raw log as a sample if it matches, is new, and there is room.
  bool add_sample(const LogRecord& log);
  bool add_sample(std::string_view raw);
  void clear_samples() noexcept { samples_.clear(); }

  bool same_tokens(const Template& other) const noexcept { return tokens_ == other.tokens_; }

 private:
  TemplateId id_{};
  std::vector<Token> tokens_;
  std::vector<std::string> samples_;
  std::size_t sample_capacity_ = kDefaultSampleCapacity;
};

// Counts "<*>" occurrences in a rendered template or token.
std::size_t count_wildcards(std::string_view text) noexcept;

}  // namespace efparse

template <>
struct std::hash<efparse::TemplateId> {
  std::size_t operator()(efparse::TemplateId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
