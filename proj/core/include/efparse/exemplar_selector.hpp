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
#include <deque>
#include <string>
#include <vector>

#include "efparse/token.hpp"

namespace efparse {

/// Recent raw logs from which demonstrations are picked: similar to the
/// target, but as different from each other as possible.
class ExemplarPool {
 public:
  static constexpr std::size_t kDefaultCapacity = 10000;
  static constexpr double kDefaultThreshold = 0.75;
  static constexpr std::size_t kDefaultMaxExemplars = 3;

  // Throws std::invalid_argument for a zero capacity or max_exemplars, or a
  // threshold outside (0, 1].
  explicit ExemplarPool(std::size_t capacity = kDefaultCapacity, double threshold = kDefaultThreshold,
                        std::size_t max_exemplars = kDefaultMaxExemplars);

  // Appends the log, evicting the oldest entry when full. A repeat of the
  // most recent entry is skipped.
  void observe(const LogRecord& log);

  // Up to max_exemplars raw logs, each at least `threshold` similar to the
  // target. The set is filled in pool order, then each further candidate
  // replaces the member whose swap lowers the mean pairwise similarity the
  // most, if it lowers it at all.
  std::vector<std::string> select(const LogRecord& target) const;

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t max_exemplars() const noexcept { return max_exemplars_; }
  double threshold() const noexcept { return threshold_; }

  // Mean similarity over all unordered pairs; 0 for fewer than two members.
  static double mean_pairwise_similarity(const std::vector<const TokenSeq*>& members);

 private:
  struct Entry {
    std::string raw;
    TokenSeq tokens;
  };

  std::size_t capacity_;
  double threshold_;
  std::size_t max_exemplars_;
  std::deque<Entry> entries_;
};

}  // namespace efparse
