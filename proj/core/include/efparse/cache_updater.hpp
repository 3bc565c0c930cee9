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
#include <optional>
#include <string_view>
#include <vector>

#include "efparse/dual_cache.hpp"
#include "efparse/lexicon.hpp"
#include "efparse/token.hpp"

namespace efparse {

class Gateway;

/// One differing region between two templates, delimited by tokens of their
/// longest common subsequence. Ranges are half-open indices into A and B.
struct SegmentPair {
  std::size_t left_begin = 0;
  std::size_t left_end = 0;
  std::size_t right_begin = 0;
  std::size_t right_end = 0;
  std::vector<Token> left;
  std::vector<Token> right;
  std::optional<Token> anchor_before;
  std::optional<Token> anchor_after;
};

// Partitions A and B around their LCS. A gap where one side is empty swallows
// an adjacent wildcard anchor (the following one when possible), so a split
// variable such as "Mon <*>" against "<*>" is compared as one region.
std::vector<SegmentPair> pair_segments(const Template& a, const Template& b);

enum class SegmentDecision { MergeFast, MergeSemantic, Keep };

std::string_view to_string(SegmentDecision d) noexcept;

// Structural, composition and grammatical gates, in that order.
SegmentDecision assess_segment(const SegmentPair& pair, const Lexicon& lexicon);

// Position-wise merge of equal-length segments: differing tokens become the
// wildcard. Throws std::invalid_argument for unequal lengths.
std::vector<Token> merge_segment_fast(const SegmentPair& pair);

// Asks the gateway for a merged region and keeps it only if A and B, with the
// region substituted, still match their own sample logs. nullopt on gateway
// failure or rejection.
std::optional<std::vector<Token>> merge_segment_semantic(const SegmentPair& pair, const Template& a,
                                                         const Template& b, Gateway* gateway);

struct MergeOutcome {
  enum class Kind { InsertNew, FullMerge, PartialMerge };

  Kind kind = Kind::InsertNew;
  // InsertNew: the inserted template. FullMerge: the merged template.
  // PartialMerge: the refined relevant template, then the refined new one.
  std::vector<Template> results;
  // Template now covering the new template's source log.
  TemplateId target_id{};
  // Relevant template removed by a merge, and the template that replaced it.
  std::optional<TemplateId> retired;
  std::optional<TemplateId> successor;
};

std::string_view to_string(MergeOutcome::Kind k) noexcept;

/// Decides, for a freshly validated template, whether it merges with its most
/// relevant cached template or goes in as a new entry.
class CacheUpdater {
 public:
  CacheUpdater(const Lexicon& lexicon, Gateway* gateway) : lexicon_(lexicon), gateway_(gateway) {}

  // Bucket retrieval plus LCS segment merging.
  MergeOutcome update(DualCache& cache, Template t_new) const;

  // Baseline strategy: only templates of the same length that share the
  // first tree edge are considered, and differing positions are replaced by
  // the wildcard without further checks.
  MergeOutcome update_same_length(DualCache& cache, Template t_new) const;

 private:
  const Lexicon& lexicon_;
  Gateway* gateway_;
};

}  // namespace efparse
