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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "efparse/cache_updater.hpp"
#include "efparse/corrector.hpp"
#include "efparse/dual_cache.hpp"
#include "efparse/exemplar_selector.hpp"
#include "efparse/lexicon.hpp"
#include "efparse/match.hpp"
#include "efparse/token.hpp"

namespace efparse {

class Gateway;

struct PipelineOptions {
  double similarity_threshold = 0.75;
  std::size_t max_demonstrations = 3;
  std::size_t exemplar_pool_size = ExemplarPool::kDefaultCapacity;
  double exemplar_threshold = 0.75;
  std::string special_chars = std::string(kDefaultSpecialChars);
  std::size_t sample_capacity = Template::kDefaultSampleCapacity;
  // Ablation switches. Without correction, a template that does not match
  // its log is replaced by the log itself. Without the dual cache, updates
  // use the same-length baseline strategy.
  bool correction = true;
  bool dual_cache = true;
};

enum class Provenance { CacheHit, LlmPath };

std::string_view to_string(Provenance p) noexcept;

struct ParseResult {
  std::uint64_t line_id = 0;
  std::string raw;
  TemplateId template_id{};
  std::string rendered;
  ParameterList parameters;
  Provenance provenance = Provenance::CacheHit;
  std::chrono::nanoseconds latency{0};
};

struct StreamStats {
  std::size_t lines = 0;
  std::size_t blank_skipped = 0;
  std::size_t cache_hits = 0;
  std::size_t llm_path = 0;
  std::size_t llm_calls = 0;
  std::size_t llm_failures = 0;
  std::size_t extraction_fallbacks = 0;
  std::size_t full_merges = 0;
  std::size_t partial_merges = 0;
  std::size_t corrections = 0;
  std::size_t templates = 0;
  double seconds = 0.0;

  double hit_rate() const noexcept {
    return lines == 0 ? 0.0 : static_cast<double>(cache_hits) / static_cast<double>(lines);
  }
};

// Retired template id -> the id that absorbed it.
class IdResolutionMap {
 public:
  void retire(TemplateId old_id, TemplateId successor);
  TemplateId resolve(TemplateId id) const;
  std::size_t size() const noexcept { return next_.size(); }

 private:
  std::unordered_map<TemplateId, TemplateId> next_;
};

/// Per-log flow: tree lookup, then on a miss exemplar selection, template
/// extraction, correction and cache update.
class Parser {
 public:
  // gateway may be null, in which case every miss takes the fallback
  // template (the log itself, refined by the corrector).
  Parser(const Lexicon& lexicon, Gateway* gateway, PipelineOptions options = {});

  // Precondition: the log is not blank.
  ParseResult parse_line(const LogRecord& log);

  // Points every result at the template that now covers it: follows merge
  // retirements and re-matches results whose template no longer fits.
  void resolve(std::vector<ParseResult>& results);

  const DualCache& cache() const noexcept { return cache_; }
  DualCache& cache() noexcept { return cache_; }
  const IdResolutionMap& id_map() const noexcept { return ids_; }
  const StreamStats& stats() const noexcept { return stats_; }
  StreamStats& stats() noexcept { return stats_; }
  const PipelineOptions& options() const noexcept { return options_; }

 private:
  Template extract(const LogRecord& log, const std::vector<std::string>& exemplars);

  const Lexicon& lexicon_;
  Gateway* gateway_;
  PipelineOptions options_;
  DualCache cache_;
  ExemplarPool pool_;
  Corrector corrector_;
  CacheUpdater updater_;
  IdResolutionMap ids_;
  StreamStats stats_;
};

struct StreamOutput {
  std::vector<ParseResult> results;
  std::vector<std::string> templates;  // final cache, rendered, in id order
  StreamStats stats;
};

// Parses records in order, skipping blank ones, then resolves template ids
// against the final cache.
StreamOutput parse_stream(const std::vector<LogRecord>& records, const Lexicon& lexicon, Gateway* gateway,
                          const PipelineOptions& options = {});

}  // namespace efparse
