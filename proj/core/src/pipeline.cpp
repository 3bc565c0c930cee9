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

#include "efparse/pipeline.hpp"

#include <stdexcept>

#include "efparse/llm_gateway.hpp"

namespace efparse {

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::CacheHit ? "cache" : "llm";
}

void IdResolutionMap::retire(TemplateId old_id, TemplateId successor) {
  if (old_id == successor) return;
  next_[old_id] = successor;
}

TemplateId IdResolutionMap::resolve(TemplateId id) const {
  // Retired ids never come back, so chains are acyclic; the bound guards
  // against a corrupted map.
  for (std::size_t steps = 0; steps <= next_.size(); ++steps) {
    auto it = next_.find(id);
    if (it == next_.end()) return id;
    id = it->second;
  }
  throw std::logic_error("template id resolution does not terminate");
}

Parser::Parser(const Lexicon& lexicon, Gateway* gateway, PipelineOptions options)
    : lexicon_(lexicon),
      gateway_(gateway),
      options_(std::move(options)),
      cache_(options_.similarity_threshold, options_.sample_capacity),
      pool_(options_.exemplar_pool_size, options_.exemplar_threshold, options_.max_demonstrations),
      corrector_(lexicon_, gateway_, options_.special_chars),
      updater_(lexicon_, gateway_) {}

Template Parser::extract(const LogRecord& log, const std::vector<std::string>& exemplars) {
  if (!gateway_) {
    ++stats_.extraction_fallbacks;
    return Template::from_log(log, options_.sample_capacity);
  }
  try {
    const std::string raw = gateway_->extract_template(log.raw, exemplars);
    return Template::parse(raw, options_.sample_capacity);
  } catch (const GatewayError&) {
  } catch (const std::invalid_argument&) {
  }
  ++stats_.extraction_fallbacks;
  return Template::from_log(log, options_.sample_capacity);
}

ParseResult Parser::parse_line(const LogRecord& log) {
  if (log.tokens.empty()) throw std::invalid_argument("parse_line needs a non-blank log");
  const auto start = std::chrono::steady_clock::now();
  ParseResult result;
  result.line_id = log.line_id;
  result.raw = log.raw;
  ++stats_.lines;

  if (const Template* hit = cache_.tree_match(log)) {
    ++stats_.cache_hits;
    result.provenance = Provenance::CacheHit;
    result.template_id = hit->id();
    cache_.add_sample(hit->id(), log);
  } else {
    ++stats_.llm_path;
    result.provenance = Provenance::LlmPath;
    const auto exemplars = pool_.select(log);
    const std::size_t calls_before = gateway_ ? gateway_->call_count() : 0;
    const std::size_t failures_before = gateway_ ? gateway_->failure_count() : 0;

    Template candidate = extract(log, exemplars);
    if (options_.correction) {
      auto [validated, trace] = corrector_.validate(log, candidate, !exemplars.empty());
      if (!trace.empty()) ++stats_.corrections;
      candidate = std::move(validated);
    } else if (!matches(candidate, log)) {
      candidate = Template::from_log(log, options_.sample_capacity);
    }
    candidate.add_sample(log);

    const MergeOutcome outcome = options_.dual_cache ? updater_.update(cache_, std::move(candidate))
                                                     : updater_.update_same_length(cache_, std::move(candidate));
    if (outcome.kind == MergeOutcome::Kind::FullMerge) ++stats_.full_merges;
    if (outcome.kind == MergeOutcome::Kind::PartialMerge) ++stats_.partial_merges;
    if (outcome.retired && outcome.successor) ids_.retire(*outcome.retired, *outcome.successor);
    result.template_id = outcome.target_id;

    if (gateway_) {
      stats_.llm_calls += gateway_->call_count() - calls_before;
      stats_.llm_failures += gateway_->failure_count() - failures_before;
    }
  }

  const Template& t = *cache_.find(result.template_id);
  result.rendered = t.render();
  if (auto params = match_template(t, log)) result.parameters = std::move(*params);
  pool_.observe(log);
  stats_.templates = cache_.size();
  result.latency = std::chrono::steady_clock::now() - start;
  return result;
}

void Parser::resolve(std::vector<ParseResult>& results) {
  for (auto& r : results) {
    const LogRecord log(r.line_id, r.raw);
    const Template* t = cache_.find(ids_.resolve(r.template_id));
    if (!t || !matches(*t, log)) {
      t = cache_.tree_match(log);
      for (auto it = cache_.templates().begin(); !t && it != cache_.templates().end(); ++it) {
        if (matches(it->second, log)) t = &it->second;
      }
    }
    if (!t) {
      // The emitted template was merged away and nothing cached covers this
      // log any more; bring the emitted template back.
      Template restored = Template::parse(r.rendered, options_.sample_capacity);
      restored.add_sample(log);
      t = cache_.find(cache_.insert(std::move(restored)));
    }
    r.template_id = t->id();
    r.rendered = t->render();
    r.parameters = match_template(*t, log).value_or(ParameterList{});
  }
  stats_.templates = cache_.size();
}

StreamOutput parse_stream(const std::vector<LogRecord>& records, const Lexicon& lexicon, Gateway* gateway,
                          const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Parser parser(lexicon, gateway, options);
  StreamOutput out;
  out.results.reserve(records.size());
  std::size_t blank = 0;
  for (const auto& record : records) {
    if (record.tokens.empty()) {
      ++blank;
      continue;
    }
    out.results.push_back(parser.parse_line(record));
  }
  parser.resolve(out.results);
  out.stats = parser.stats();
  out.stats.blank_skipped = blank;
  for (const auto& [id, t] : parser.cache().templates()) out.templates.push_back(t.render());
  out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace efparse
