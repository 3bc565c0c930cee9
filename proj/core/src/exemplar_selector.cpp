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

#include "efparse/exemplar_selector.hpp"

#include <stdexcept>

#include "efparse/distance.hpp"

namespace efparse {

ExemplarPool::ExemplarPool(std::size_t capacity, double threshold, std::size_t max_exemplars)
    : capacity_(capacity), threshold_(threshold), max_exemplars_(max_exemplars) {
  if (capacity_ == 0) throw std::invalid_argument("exemplar pool capacity must be positive");
  if (max_exemplars_ == 0) throw std::invalid_argument("at least one demonstration must be allowed");
  if (!(threshold_ > 0.0 && threshold_ <= 1.0)) throw std::invalid_argument("exemplar threshold must lie in (0, 1]");
}

void ExemplarPool::observe(const LogRecord& log) {
  if (log.tokens.empty()) return;
  if (!entries_.empty() && entries_.back().raw == log.raw) return;
  if (entries_.size() == capacity_) entries_.pop_front();
  entries_.push_back({log.raw, log.tokens});
}

double ExemplarPool::mean_pairwise_similarity(const std::vector<const TokenSeq*>& members) {
  if (members.size() < 2) return 0.0;
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      sum += similarity(*members[i], *members[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

std::vector<std::string> ExemplarPool::select(const LogRecord& target) const {
  const std::size_t k = max_exemplars_;
  std::vector<const Entry*> chosen;
  // sim[i][j]: similarity between chosen members i and j.
  std::vector<std::vector<double>> sim;
  double pair_sum = 0.0;
  std::vector<double> to_new(k);

  for (const auto& entry : entries_) {
    if (entry.raw == target.raw || entry.tokens == target.tokens) continue;
    if (!similarity_at_least(entry.tokens, target.tokens, threshold_)) continue;
    bool duplicate = false;
    for (const Entry* c : chosen) duplicate = duplicate || c->raw == entry.raw;
    if (duplicate) continue;

    for (std::size_t i = 0; i < chosen.size(); ++i) to_new[i] = similarity(entry.tokens, chosen[i]->tokens);

    if (chosen.size() < k) {
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        sim[i].push_back(to_new[i]);
        pair_sum += to_new[i];
      }
      sim.emplace_back(to_new.begin(), to_new.begin() + static_cast<std::ptrdiff_t>(chosen.size()));
      sim.back().push_back(1.0);
      chosen.push_back(&entry);
      continue;
    }
    if (k < 2) continue;  // a single exemplar has no intra-set similarity

    // Swapping member s for the candidate replaces row s's pair terms.
    std::size_t best_slot = k;
    double best_sum = pair_sum;
    for (std::size_t slot = 0; slot < k; ++slot) {
      double trial = pair_sum;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == slot) continue;
        trial += to_new[j] - sim[slot][j];
      }
      if (trial < best_sum - 1e-12) {
        best_sum = trial;
        best_slot = slot;
      }
    }
    if (best_slot == k) continue;
    chosen[best_slot] = &entry;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == best_slot) continue;
      sim[best_slot][j] = to_new[j];
      sim[j][best_slot] = to_new[j];
    }
    pair_sum = best_sum;
  }

  std::vector<std::string> out;
  out.reserve(chosen.size());
  for (const Entry* c : chosen) out.push_back(c->raw);
  return out;
}

}  // namespace efparse
