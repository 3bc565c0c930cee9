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

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

#include "efparse/token.hpp"

namespace efparse {

enum class CompositionClass { AlphabeticOnly, NumericOnly, Alphanumeric, Symbolic };
enum class PosClass { X, NUM, PROPN, VERB, OTHER };

std::string_view to_string(CompositionClass c) noexcept;
std::string_view to_string(PosClass p) noexcept;

// Character composition of a token. NumericOnly allows one leading sign and
// interior dots ("-3.14", "10.0.0.1"). Throws std::invalid_argument on "".
CompositionClass composition_class(std::string_view token);

// Identifier-like shapes: paths, URLs, emails, key=value, names joined by
// '-', '_', '.' or ':', and letter+digit mixes such as "apache2".
bool looks_like_identifier(std::string_view token);

/// Verb lexicon plus English wordlist backing the part-of-speech heuristic.
///
/// Both files are plain text with one lowercase entry per line; blank lines
/// and lines starting with '#' are ignored.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::unordered_set<std::string> verbs, std::unordered_set<std::string> words)
      : verbs_(std::move(verbs)), words_(std::move(words)) {}

  // Throws std::runtime_error if a file cannot be read.
  static Lexicon load(const std::filesystem::path& verb_file,
                      const std::filesystem::path& wordlist_file);
  // Loads verbs.txt and english_words.txt from data_dir() / "lexicon".
  static Lexicon load_default();

  bool is_verb(std::string_view token) const;
  // lowercase(token) is in the wordlist.
  bool in_vocabulary(std::string_view token) const;

  std::size_t verb_count() const noexcept { return verbs_.size(); }
  std::size_t word_count() const noexcept { return words_.size(); }

  // Heuristic tag: NUM for numbers, X for identifier shapes, VERB from the
  // verb lexicon, PROPN for capitalized words (a sentence-initial word that
  // is ordinary vocabulary is OTHER), OTHER for the rest.
  PosClass pos_class(std::string_view token, const TokenSeq& sentence, std::size_t index) const;
  PosClass pos_class_at(std::string_view token, bool sentence_initial) const;

 private:
  std::unordered_set<std::string> verbs_;
  std::unordered_set<std::string> words_;
};

std::string to_lower(std::string_view s);

// Directory holding lexicon/ and prompts/. Resolution order: the
// EFPARSE_DATA_DIR environment variable, the install location, then the
// source tree.
std::filesystem::path data_dir();

}  // namespace efparse
