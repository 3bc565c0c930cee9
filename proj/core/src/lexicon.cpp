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

#include "efparse/lexicon.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace efparse {
namespace {

bool is_alpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
bool is_alnum(char c) noexcept { return is_alpha(c) || is_digit(c); }
bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }

bool numeric_only(std::string_view t) {
  std::size_t i = 0;
  if (t[0] == '+' || t[0] == '-') ++i;
  if (i == t.size()) return false;
  bool prev_dot = true;  // forbids a leading dot
  for (; i < t.size(); ++i) {
    if (is_digit(t[i])) {
      prev_dot = false;
    } else if (t[i] == '.') {
      if (prev_dot) return false;
      prev_dot = true;
    } else {
      return false;
    }
  }
  return !prev_dot;
}

std::unordered_set<std::string> read_entries(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read lexicon file " + file.string());
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.insert(to_lower(tokens.front()));
  }
  return out;
}

// Drops leading and trailing characters that are not letters or digits.
std::string_view trim_punct(std::string_view t) {
  std::size_t b = 0;
  std::size_t e = t.size();
  while (b < e && !is_alnum(t[b])) ++b;
  while (e > b && !is_alnum(t[e - 1])) --e;
  return t.substr(b, e - b);
}

}  // namespace

std::string_view to_string(CompositionClass c) noexcept {
  switch (c) {
    case CompositionClass::AlphabeticOnly: return "AlphabeticOnly";
    case CompositionClass::NumericOnly: return "NumericOnly";
    case CompositionClass::Alphanumeric: return "Alphanumeric";
    case CompositionClass::Symbolic: return "Symbolic";
  }
  return "?";
}

std::string_view to_string(PosClass p) noexcept {
  switch (p) {
    case PosClass::X: return "X";
    case PosClass::NUM: return "NUM";
    case PosClass::PROPN: return "PROPN";
    case PosClass::VERB: return "VERB";
    case PosClass::OTHER: return "OTHER";
  }
  return "?";
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

CompositionClass composition_class(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("composition_class of an empty token");
  bool letters = false;
  bool digits = false;
  bool other = false;
  for (char c : token) {
    if (is_alpha(c)) letters = true;
    else if (is_digit(c)) digits = true;
    else other = true;
  }
  if (letters && !digits && !other) return CompositionClass::AlphabeticOnly;
  if (letters && digits) return CompositionClass::Alphanumeric;
  if (numeric_only(token)) return CompositionClass::NumericOnly;
  return CompositionClass::Symbolic;
}

bool looks_like_identifier(std::string_view t) {
  if (t.empty()) return false;
  if (t.find("://") != std::string_view::npos) return true;
  for (char c : t) {
    if (c == '/' || c == '\\' || c == '@' || c == '=' || c == '_') return true;
  }
  if (composition_class(t) == CompositionClass::Alphanumeric) return true;
  // A separator with letters or digits on both sides, e.g. "db-primary".
  bool has_letter = false;
  for (char c : t) has_letter = has_letter || is_alpha(c);
  if (!has_letter) return false;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if ((c == '-' || c == '.' || c == ':') && is_alnum(t[i - 1]) && is_alnum(t[i + 1])) return true;
  }
  return false;
}

Lexicon Lexicon::load(const std::filesystem::path& verb_file, const std::filesystem::path& wordlist_file) {
  return Lexicon(read_entries(verb_file), read_entries(wordlist_file));
}

Lexicon Lexicon::load_default() {
  const auto dir = data_dir() / "lexicon";
  return load(dir / "verbs.txt", dir / "english_words.txt");
}

bool Lexicon::is_verb(std::string_view token) const {
  const auto core = trim_punct(token);
  if (core.empty()) return false;
  return verbs_.contains(to_lower(core));
}

bool Lexicon::in_vocabulary(std::string_view token) const {
  if (token.empty()) return false;
  return words_.contains(to_lower(token));
}

PosClass Lexicon::pos_class(std::string_view token, const TokenSeq& sentence, std::size_t index) const {
  if (index >= sentence.size()) throw std::out_of_range("pos_class index outside the sentence");
  return pos_class_at(token, index == 0);
}

PosClass Lexicon::pos_class_at(std::string_view token, bool sentence_initial) const {
  if (token.empty() || token == kWildcard) return PosClass::OTHER;
  if (composition_class(token) == CompositionClass::NumericOnly) return PosClass::NUM;
  if (looks_like_identifier(token)) return PosClass::X;
  if (is_verb(token)) return PosClass::VERB;
  const auto core = trim_punct(token);
  const bool alphabetic =
      !core.empty() && std::all_of(core.begin(), core.end(), [](char c) { return is_alpha(c); });
  if (alphabetic && is_upper(core.front())) {
    if (sentence_initial && in_vocabulary(core)) return PosClass::OTHER;
    return PosClass::PROPN;
  }
  return PosClass::OTHER;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("EFPARSE_DATA_DIR"); env && *env) return env;
#ifdef EFPARSE_INSTALL_DATA_DIR
  if (std::filesystem::exists(std::filesystem::path(EFPARSE_INSTALL_DATA_DIR) / "lexicon")) {
    return EFPARSE_INSTALL_DATA_DIR;
  }
#endif
#ifdef EFPARSE_SOURCE_DATA_DIR
  return EFPARSE_SOURCE_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace efparse
