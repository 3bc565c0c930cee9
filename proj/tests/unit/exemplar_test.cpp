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

#include <gtest/gtest.h>

#include <algorithm>

#include "efparse/distance.hpp"
#include "efparse/exemplar_selector.hpp"
#include "oracles.hpp"

using namespace efparse;

TEST(ExemplarPool, ObserveAndEvict) {
  ExemplarPool pool(3);
  pool.observe(LogRecord(1, "a"));
  pool.observe(LogRecord(2, "b"));
  pool.observe(LogRecord(3, "c"));
  EXPECT_EQ(pool.size(), 3u);
  pool.observe(LogRecord(4, "c"));
  EXPECT_EQ(pool.size(), 3u);
  pool.observe(LogRecord(5, "d"));
  EXPECT_EQ(pool.size(), 3u);
  // "a" was evicted: a target equal to "a x" finds nothing similar to "a".
  ExemplarPool one(1, 0.5);
  one.observe(LogRecord(1, "p q"));
  one.observe(LogRecord(2, "r s"));
  EXPECT_TRUE(one.select(LogRecord(3, "p q")).empty());
}

TEST(ExemplarPool, AdjacentDuplicateSkipped) {
  ExemplarPool pool(10);
  pool.observe(LogRecord(1, "x y"));
  pool.observe(LogRecord(2, "x y"));
  EXPECT_EQ(pool.size(), 1u);
  pool.observe(LogRecord(3, "z"));
  pool.observe(LogRecord(4, "x y"));
  EXPECT_EQ(pool.size(), 3u);
}

TEST(ExemplarPool, RejectsBadArguments) {
  EXPECT_THROW(ExemplarPool(0), std::invalid_argument);
  EXPECT_THROW(ExemplarPool(5, 0.0), std::invalid_argument);
  EXPECT_THROW(ExemplarPool(5, 1.1), std::invalid_argument);
  EXPECT_THROW(ExemplarPool(5, 0.5, 0), std::invalid_argument);
}

TEST(ExemplarSelect, EmptyAndUnderCapacity) {
  ExemplarPool pool;
  EXPECT_TRUE(pool.select(LogRecord(1, "job 1 done on node a")).empty());
  pool.observe(LogRecord(1, "job 2 done on node a"));
  pool.observe(LogRecord(2, "something else entirely here"));
  pool.observe(LogRecord(3, "job 3 done on node a"));
  EXPECT_EQ(pool.select(LogRecord(4, "job 1 done on node a")),
            (std::vector<std::string>{"job 2 done on node a", "job 3 done on node a"}));
}

TEST(ExemplarSelect, ExcludesTargetDuplicates) {
  ExemplarPool pool;
  pool.observe(LogRecord(1, "job 1 done on node a"));
  EXPECT_TRUE(pool.select(LogRecord(2, "job 1 done on node a")).empty());
}

TEST(ExemplarSelect, DiverseCandidateDisplacesNearDuplicates) {
  ExemplarPool pool(100, 0.5, 3);
  for (const char* s : {"w 1 a b c d e f", "w 2 a b c d e f", "w 3 a b c d e f", "w 4 a b c d e f"}) {
    pool.observe(LogRecord(1, s));
  }
  pool.observe(LogRecord(1, "q 9 a b c d x y"));
  const auto chosen = pool.select(LogRecord(2, "w 0 a b c d e f"));
  ASSERT_EQ(chosen.size(), 3u);
  EXPECT_NE(std::find(chosen.begin(), chosen.end(), "q 9 a b c d x y"), chosen.end());
}

TEST(ExemplarSelect, AgreesWithGreedyReference) {
  oracle::Rng rng(51);
  const std::vector<std::string> alpha = {"a", "b", "c"};
  for (int round = 0; round < 300; ++round) {
    ExemplarPool pool(50, 0.5, 3);
    std::vector<TokenSeq> entries;
    for (int i = 0; i < 12; ++i) {
      const auto toks = oracle::random_tokens(rng, 4, 5, alpha);
      if (!entries.empty() && entries.back() == toks) continue;
      entries.push_back(toks);
      pool.observe(LogRecord(1, join_tokens(toks)));
    }
    const auto target = oracle::random_tokens(rng, 4, 5, alpha);
    const auto got = pool.select(LogRecord(1, join_tokens(target)));

    // Reference: candidates in pool order, fill, then greedy best swap.
    std::vector<TokenSeq> cands;
    for (const auto& e : entries) {
      if (e == target || similarity(e, target) < 0.5) continue;
      if (std::find(cands.begin(), cands.end(), e) != cands.end()) continue;
      cands.push_back(e);
    }
    auto mean = [](const std::vector<TokenSeq>& s) {
      if (s.size() < 2) return 0.0;
      double sum = 0;
      int n = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j, ++n) sum += similarity(s[i], s[j]);
      return sum / n;
    };
    std::vector<TokenSeq> set;
    for (const auto& c : cands) {
      if (set.size() < 3) {
        set.push_back(c);
        continue;
      }
      double best = mean(set);
      int best_k = -1;
      for (int k = 0; k < 3; ++k) {
        auto trial = set;
        trial[k] = c;
        const double m = mean(trial);
        if (m < best - 1e-12) {
          best = m;
          best_k = k;
        }
      }
      if (best_k >= 0) set[best_k] = c;
    }
    std::vector<std::string> expected;
    for (const auto& s : set) expected.push_back(join_tokens(s));
    ASSERT_EQ(got, expected) << "round " << round;
    EXPECT_LE(got.size(), 3u);
    for (const auto& g : got) EXPECT_GE(similarity(tokenize(g), target), 0.5);
  }
}

TEST(ExemplarSelect, MeanPairwiseSimilarity) {
  const TokenSeq a = {"a", "b"}, b = {"a", "c"}, c = {"x", "y"};
  EXPECT_DOUBLE_EQ(ExemplarPool::mean_pairwise_similarity({&a}), 0.0);
  EXPECT_DOUBLE_EQ(ExemplarPool::mean_pairwise_similarity({&a, &b}), 0.5);
  EXPECT_DOUBLE_EQ(ExemplarPool::mean_pairwise_similarity({&a, &b, &c}), 0.5 / 3.0);
}
