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

#include "efparse/cache_updater.hpp"

#include <array>
#include <stdexcept>

#include "efparse/distance.hpp"
#include "efparse/llm_gateway.hpp"
#include "efparse/match.hpp"

namespace efparse {
namespace {

std::vector<Token> slice(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
  return {tokens.begin() + static_cast<std::ptrdiff_t>(begin), tokens.begin() + static_cast<std::ptrdiff_t>(end)};
}

TokenSeq texts(const std::vector<Token>& tokens) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text());
  return out;
}

// Replaces the given ranges of `base` (sorted, disjoint) with new tokens.
struct Splice {
  std::size_t begin;
  std::size_t end;
  std::vector<Token> tokens;
};

std::vector<Token> apply_splices(const std::vector<Token>& base, const std::vector<Splice>& splices) {
  std::vector<Token> out;
  std::size_t pos = 0;
  for (const auto& s : splices) {
    out.insert(out.end(), base.begin() + static_cast<std::ptrdiff_t>(pos),
               base.begin() + static_cast<std::ptrdiff_t>(s.begin));
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
    pos = s.end;
  }
  out.insert(out.end(), base.begin() + static_cast<std::ptrdiff_t>(pos), base.end());
  return out;
}

bool covers_samples(const std::vector<Token>& tokens, const Template& source) {
  if (tokens.empty()) return false;
  const std::string rendered = Template(tokens).render();
  for (const auto& s : source.sample_logs()) {
    if (!match_rendered(rendered, normalize_whitespace(s))) return false;
  }
  return true;
}

Template with_samples(std::vector<Token> tokens, std::size_t capacity, const Template& first,
                      const Template* second = nullptr) {
  Template t(std::move(tokens), capacity);
  for (const auto& s : first.sample_logs()) t.add_sample(s);
  if (second) {
    for (const auto& s : second->sample_logs()) t.add_sample(s);
  }
  return t;
}

bool variable_evidence(PosClass p) { return p == PosClass::X || p == PosClass::NUM || p == PosClass::PROPN; }

}  // namespace

std::string_view to_string(SegmentDecision d) noexcept {
  switch (d) {
    case SegmentDecision::MergeFast: return "MergeFast";
    case SegmentDecision::MergeSemantic: return "MergeSemantic";
    case SegmentDecision::Keep: return "Keep";
  }
  return "?";
}

std::string_view to_string(MergeOutcome::Kind k) noexcept {
  switch (k) {
    case MergeOutcome::Kind::InsertNew: return "InsertNew";
    case MergeOutcome::Kind::FullMerge: return "FullMerge";
    case MergeOutcome::Kind::PartialMerge: return "PartialMerge";
  }
  return "?";
}

std::vector<SegmentPair> pair_segments(const Template& a, const Template& b) {
  const auto& ta = a.tokens();
  const auto& tb = b.tokens();
  auto anchors = lcs_alignment(ta, tb);

  // Gap k lies between anchor k-1 and anchor k (virtual anchors at both ends).
  auto gap_bounds = [&](std::size_t k) {
    const std::size_t lb = k == 0 ? 0 : anchors[k - 1].first + 1;
    const std::size_t rb = k == 0 ? 0 : anchors[k - 1].second + 1;
    const std::size_t le = k == anchors.size() ? ta.size() : anchors[k].first;
    const std::size_t re = k == anchors.size() ? tb.size() : anchors[k].second;
    return std::array<std::size_t, 4>{lb, le, rb, re};
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k <= anchors.size() && !changed; ++k) {
      const auto [lb, le, rb, re] = gap_bounds(k);
      const bool left_empty = lb == le;
      const bool right_empty = rb == re;
      if (left_empty == right_empty) continue;
      if (k < anchors.size() && ta[anchors[k].first].is_wildcard()) {
        anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
      } else if (k > 0 && ta[anchors[k - 1].first].is_wildcard()) {
        anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(k - 1));
        changed = true;
      }
    }
  }

  std::vector<SegmentPair> pairs;
  for (std::size_t k = 0; k <= anchors.size(); ++k) {
    const auto [lb, le, rb, re] = gap_bounds(k);
    if (lb == le && rb == re) continue;
    SegmentPair p;
    p.left_begin = lb;
    p.left_end = le;
    p.right_begin = rb;
    p.right_end = re;
    p.left = slice(ta, lb, le);
    p.right = slice(tb, rb, re);
    if (k > 0) p.anchor_before = ta[anchors[k - 1].first];
    if (k < anchors.size()) p.anchor_after = ta[anchors[k].first];
    pairs.push_back(std::move(p));
  }
  return pairs;
}

SegmentDecision assess_segment(const SegmentPair& pair, const Lexicon& lexicon) {
  const auto& left = pair.left;
  const auto& right = pair.right;
  const bool equal_length = left.size() == right.size();

  // Structural gate: the sides differ only where one of them holds "<*>".
  std::vector<std::pair<const Token*, const Token*>> differing;
  if (equal_length) {
    bool only_wildcards = true;
    for (std::size_t k = 0; k < left.size(); ++k) {
      if (left[k] == right[k]) continue;
      differing.emplace_back(&left[k], &right[k]);
      if (!left[k].is_wildcard() && !right[k].is_wildcard()) only_wildcards = false;
    }
    if (only_wildcards) return SegmentDecision::MergeFast;
  } else {
    for (const auto& l : left) {
      for (const auto& r : right) differing.emplace_back(&l, &r);
    }
  }

  // Composition gate.
  for (const auto& [l, r] : differing) {
    if (l->has_wildcard() || r->has_wildcard()) continue;
    if (composition_class(l->text()) != composition_class(r->text())) return SegmentDecision::Keep;
  }

  // Grammatical gate.
  bool evidence = false;
  auto scan = [&](const std::vector<Token>& side, std::size_t begin) {
    for (std::size_t k = 0; k < side.size(); ++k) {
      if (side[k].has_wildcard()) {
        evidence = true;
        continue;
      }
      const PosClass p = lexicon.pos_class_at(side[k].text(), begin + k == 0);
      if (p == PosClass::VERB) return false;
      evidence = evidence || variable_evidence(p);
    }
    return true;
  };
  if (!scan(left, pair.left_begin) || !scan(right, pair.right_begin) || !evidence) return SegmentDecision::Keep;
  return equal_length ? SegmentDecision::MergeFast : SegmentDecision::MergeSemantic;
}

std::vector<Token> merge_segment_fast(const SegmentPair& pair) {
  if (pair.left.size() != pair.right.size()) {
    throw std::invalid_argument("fast merge needs segments of equal length");
  }
  std::vector<Token> out;
  out.reserve(pair.left.size());
  for (std::size_t k = 0; k < pair.left.size(); ++k) {
    out.push_back(pair.left[k] == pair.right[k] ? pair.left[k] : Token::wildcard());
  }
  return out;
}

std::optional<std::vector<Token>> merge_segment_semantic(const SegmentPair& pair, const Template& a,
                                                         const Template& b, Gateway* gateway) {
  if (!gateway) return std::nullopt;
  std::string answer;
  try {
    answer = gateway->semantic_merge(texts(pair.left), texts(pair.right), a.render(), b.render());
  } catch (const GatewayError&) {
    return std::nullopt;
  }
  std::vector<Token> merged;
  for (auto& text : tokenize(answer)) merged.push_back(Token::from_text(std::move(text)));

  const auto a_sub = apply_splices(a.tokens(), {{pair.left_begin, pair.left_end, merged}});
  const auto b_sub = apply_splices(b.tokens(), {{pair.right_begin, pair.right_end, merged}});
  if (!covers_samples(a_sub, a) || !covers_samples(b_sub, b)) return std::nullopt;
  return merged;
}

MergeOutcome CacheUpdater::update(DualCache& cache, Template t_new) const {
  MergeOutcome outcome;
  auto insert_new = [&]() {
    outcome.kind = MergeOutcome::Kind::InsertNew;
    outcome.target_id = cache.insert(t_new);
    outcome.results = {*cache.find(outcome.target_id)};
    return outcome;
  };

  if (cache.find_tokens(t_new.tokens())) return insert_new();
  const auto relevant = cache.most_relevant(t_new);
  if (!relevant) return insert_new();

  const Template old = *relevant->templ;
  const auto pairs = pair_segments(old, t_new);
  if (pairs.empty()) return insert_new();

  std::vector<Splice> left_splices;
  std::vector<Splice> right_splices;
  for (const auto& p : pairs) {
    std::optional<std::vector<Token>> merged;
    switch (assess_segment(p, lexicon_)) {
      case SegmentDecision::MergeFast:
        merged = merge_segment_fast(p);
        break;
      case SegmentDecision::MergeSemantic:
        merged = merge_segment_semantic(p, old, t_new, gateway_);
        break;
      case SegmentDecision::Keep:
        break;
    }
    if (!merged) continue;
    left_splices.push_back({p.left_begin, p.left_end, *merged});
    right_splices.push_back({p.right_begin, p.right_end, std::move(*merged)});
  }
  if (left_splices.empty()) return insert_new();

  const std::size_t capacity = cache.sample_capacity();
  auto a_tokens = apply_splices(old.tokens(), left_splices);
  if (left_splices.size() == pairs.size()) {
    if (!covers_samples(a_tokens, old) || !covers_samples(a_tokens, t_new)) return insert_new();
    cache.remove(old.id());
    outcome.kind = MergeOutcome::Kind::FullMerge;
    outcome.target_id = cache.insert(with_samples(std::move(a_tokens), capacity, old, &t_new));
    outcome.retired = old.id();
    outcome.successor = outcome.target_id;
    outcome.results = {*cache.find(outcome.target_id)};
    return outcome;
  }

  auto b_tokens = apply_splices(t_new.tokens(), right_splices);
  if (!covers_samples(a_tokens, old) || !covers_samples(b_tokens, t_new)) return insert_new();
  cache.remove(old.id());
  outcome.kind = MergeOutcome::Kind::PartialMerge;
  const TemplateId a_id = cache.insert(with_samples(std::move(a_tokens), capacity, old));
  const TemplateId b_id = cache.insert(with_samples(std::move(b_tokens), capacity, t_new));
  outcome.target_id = b_id;
  outcome.retired = old.id();
  outcome.successor = a_id;
  outcome.results = {*cache.find(a_id), *cache.find(b_id)};
  return outcome;
}

MergeOutcome CacheUpdater::update_same_length(DualCache& cache, Template t_new) const {
  MergeOutcome outcome;
  auto insert_new = [&]() {
    outcome.kind = MergeOutcome::Kind::InsertNew;
    outcome.target_id = cache.insert(t_new);
    outcome.results = {*cache.find(outcome.target_id)};
    return outcome;
  };
  if (cache.find_tokens(t_new.tokens())) return insert_new();

  const auto bucket = cache.buckets().find(t_new.size());
  if (bucket == cache.buckets().end()) return insert_new();
  const Token& head = t_new.tokens().front();
  const Template* best = nullptr;
  double best_sim = 0.0;
  for (TemplateId id : bucket->second) {
    const Template& c = *cache.find(id);
    const Token& c_head = c.tokens().front();
    const bool same_edge = head.has_wildcard() ? c_head.has_wildcard() : c_head == head;
    if (!same_edge) continue;
    const double s = similarity(t_new.tokens(), c.tokens());
    if (s >= cache.threshold() && (!best || s > best_sim)) {
      best = &c;
      best_sim = s;
    }
  }
  if (!best) return insert_new();

  std::vector<Token> merged;
  for (std::size_t k = 0; k < t_new.size(); ++k) {
    merged.push_back(best->tokens()[k] == t_new.tokens()[k] ? t_new.tokens()[k] : Token::wildcard());
  }
  const Template old = *best;
  if (!covers_samples(merged, old) || !covers_samples(merged, t_new)) return insert_new();
  cache.remove(old.id());
  outcome.kind = MergeOutcome::Kind::FullMerge;
  outcome.target_id = cache.insert(with_samples(std::move(merged), cache.sample_capacity(), old, &t_new));
  outcome.retired = old.id();
  outcome.successor = outcome.target_id;
  outcome.results = {*cache.find(outcome.target_id)};
  return outcome;
}

}  // namespace efparse
