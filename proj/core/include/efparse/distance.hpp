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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace efparse {

// Unit-cost edit distance where each element (a whole token) is one symbol.
template <class SeqA, class SeqB>
std::size_t token_levenshtein(const SeqA& a, const SeqB& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Edit distance if it is at most `limit`, nullopt otherwise. Only the
// diagonal band of width 2*limit+1 is evaluated.
template <class SeqA, class SeqB>
std::optional<std::size_t> token_levenshtein_within(const SeqA& a, const SeqB& b, std::size_t limit) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t diff = n > m ? n - m : m - n;
  if (diff > limit) return std::nullopt;
  if (n == 0 || m == 0) return diff;
  const std::size_t inf = limit + 1;
  std::vector<std::size_t> prev(m + 1, inf);
  std::vector<std::size_t> cur(m + 1, inf);
  for (std::size_t j = 0; j <= std::min(m, limit); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > limit ? i - limit : 1;
    const std::size_t hi = std::min(m, i + limit);
    std::fill(cur.begin(), cur.end(), inf);
    cur[0] = i <= limit ? i : inf;
    std::size_t row_min = cur[0];
    for (std::size_t j = lo; j <= hi; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t v = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      cur[j] = std::min(v, inf);
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > limit) return std::nullopt;
    std::swap(prev, cur);
  }
  if (prev[m] > limit) return std::nullopt;
  return prev[m];
}

inline double similarity_from_distance(std::size_t distance, std::size_t len_a, std::size_t len_b) {
  const std::size_t longest = std::max(len_a, len_b);
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

// 1 - ED / max(|a|, |b|); two empty sequences count as identical.
template <class SeqA, class SeqB>
double similarity(const SeqA& a, const SeqB& b) {
  return similarity_from_distance(token_levenshtein(a, b), a.size(), b.size());
}

// Largest distance that still yields similarity >= threshold for sequences
// whose longer side has `longest` elements.
inline std::size_t distance_budget(double threshold, std::size_t longest) {
  const double budget = (1.0 - threshold) * static_cast<double>(longest);
  return budget <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(budget + 1e-9));
}

// Similarity if it reaches `threshold`, nullopt otherwise. Same result as
// comparing similarity(a, b) >= threshold, but cheaper for distant pairs.
template <class SeqA, class SeqB>
std::optional<double> similarity_at_least(const SeqA& a, const SeqB& b, double threshold) {
  const std::size_t longest = std::max(a.size(), b.size());
  const auto d = token_levenshtein_within(a, b, distance_budget(threshold, longest) + 1);
  if (!d) return std::nullopt;
  const double s = similarity_from_distance(*d, a.size(), b.size());
  if (s < threshold) return std::nullopt;
  return s;
}

// Index pairs (i, j) of one longest common subsequence, increasing in both.
// Ties resolve toward the earliest possible match in `a`.
template <class SeqA, class SeqB>
std::vector<std::pair<std::size_t, std::size_t>> lcs_alignment(const SeqA& a, const SeqB& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // suffix[i][j] = LCS length of a[i..] and b[j..]
  std::vector<std::size_t> suffix((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return suffix[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = a[i] == b[j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(at(0, 0));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (a[i] == b[j]) {
      pairs.emplace_back(i, j);
      ++i;
      ++j;
    } else if (at(i, j + 1) == at(i, j)) {
      ++j;  // a[i] can still take part in an optimal match further along b
    } else {
      ++i;
    }
  }
  return pairs;
}

template <class SeqA, class SeqB>
SeqA lcs_tokens(const SeqA& a, const SeqB& b) {
  SeqA out;
  for (const auto& [i, j] : lcs_alignment(a, b)) out.push_back(a[i]);
  return out;
}

}  // namespace efparse
