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

#include "efparse/corrector.hpp"

#include <algorithm>

#include "efparse/distance.hpp"
#include "efparse/llm_gateway.hpp"
#include "efparse/match.hpp"

namespace efparse {
namespace {

bool is_alnum(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Alphanumeric runs and single symbol characters.
void split_pieces(std::string_view text, std::vector<std::string>& out) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_alnum(text[i])) {
      const std::size_t b = i;
      while (i < text.size() && is_alnum(text[i])) ++i;
      out.emplace_back(text.substr(b, i - b));
    } else {
      out.emplace_back(1, text[i++]);
    }
  }
}

Template with_tokens_like(std::vector<Token> tokens, const Template& like) {
  Template t(std::move(tokens), like.sample_capacity());
  for (const auto& s : like.sample_logs()) t.add_sample(s);
  return t;
}

}  // namespace

Template Corrector::format_correct(const LogRecord& log, const Template& t) const {
  if (matches(t, log)) return t;
  if (log.tokens.empty()) return t;

  std::vector<std::string> template_pieces;
  for (const auto& token : t.tokens()) {
    if (token.is_wildcard()) continue;
    std::string_view rest = token.text();
    for (auto pos = rest.find(kWildcard); pos != std::string_view::npos; pos = rest.find(kWildcard)) {
      split_pieces(rest.substr(0, pos), template_pieces);
      rest.remove_prefix(pos + kWildcard.size());
    }
    split_pieces(rest, template_pieces);
  }

  std::vector<std::string> log_pieces;
  std::vector<std::size_t> owner;  // log token index of each piece
  for (std::size_t k = 0; k < log.tokens.size(); ++k) {
    split_pieces(log.tokens[k], log_pieces);
    owner.resize(log_pieces.size(), k);
  }

  std::vector<std::size_t> aligned(log.tokens.size(), 0);
  std::vector<std::size_t> total(log.tokens.size(), 0);
  for (std::size_t p = 0; p < log_pieces.size(); ++p) ++total[owner[p]];
  for (const auto& [lp, tp] : lcs_alignment(log_pieces, template_pieces)) ++aligned[owner[lp]];

  std::vector<Token> out;
  out.reserve(log.tokens.size());
  for (std::size_t k = 0; k < log.tokens.size(); ++k) {
    const bool keep = aligned[k] == total[k] && log.tokens[k] != kWildcard;
    out.push_back(keep ? Token::constant(log.tokens[k]) : Token::wildcard());
  }
  return with_tokens_like(std::move(out), t);
}

std::vector<std::string> Corrector::suspects(const Template& t) const {
  std::vector<std::string> out;
  for (const auto& token : t.tokens()) {
    if (token.has_wildcard()) continue;
    const auto& text = token.text();
    const auto specials = std::count_if(text.begin(), text.end(), [&](char c) {
      return special_chars_.find(c) != std::string::npos;
    });
    const bool suspect = specials >= 2 || composition_class(text) == CompositionClass::Alphanumeric;
    if (suspect && std::find(out.begin(), out.end(), text) == out.end()) out.push_back(text);
  }
  return out;
}

std::pair<Template, std::vector<std::string>> Corrector::over_specific_correct(const LogRecord& log,
                                                                              const Template& t) const {
  const auto candidates = suspects(t);
  if (candidates.empty() || !gateway_) return {t, {}};
  const auto confirmed = gateway_->confirm_variables(log.raw, t.render(), candidates);
  if (confirmed.empty()) return {t, {}};

  std::vector<Token> tokens = t.tokens();
  for (auto& token : tokens) {
    if (token.is_constant() && std::find(confirmed.begin(), confirmed.end(), token.text()) != confirmed.end()) {
      token = Token::wildcard();
    }
  }
  Template result = with_tokens_like(std::move(tokens), t);
  if (!matches(result, log)) return {t, {}};
  return {std::move(result), confirmed};
}

std::pair<Template, std::vector<std::string>> Corrector::over_general_correct(const LogRecord& log,
                                                                             const Template& t,
                                                                             bool had_demonstrations) const {
  if (t.size() != log.tokens.size()) return {t, {}};
  std::vector<Token> tokens = t.tokens();
  std::vector<std::string> restored;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (!tokens[k].is_wildcard()) continue;
    const std::string& word = log.tokens[k];
    if (word == kWildcard) continue;
    const bool restore = had_demonstrations ? lexicon_.pos_class(word, log.tokens, k) == PosClass::VERB
                                            : lexicon_.in_vocabulary(word);
    if (restore) {
      tokens[k] = Token::constant(word);
      restored.push_back(word);
    }
  }
  if (restored.empty()) return {t, {}};
  Template result = with_tokens_like(std::move(tokens), t);
  if (!matches(result, log)) return {t, {}};
  return {std::move(result), std::move(restored)};
}

std::pair<Template, CorrectionTrace> Corrector::validate(const LogRecord& log, const Template& t_ori,
                                                         bool had_demonstrations) const {
  CorrectionTrace trace;
  Template t = format_correct(log, t_ori);
  trace.format_applied = !t.same_tokens(t_ori);
  auto [specific, abstracted] = over_specific_correct(log, t);
  trace.over_specific_tokens = std::move(abstracted);
  auto [general, restored] = over_general_correct(log, specific, had_demonstrations);
  trace.over_general_restored = std::move(restored);
  return {std::move(general), std::move(trace)};
}

}  // namespace efparse
