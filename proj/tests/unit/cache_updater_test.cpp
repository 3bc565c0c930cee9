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

#include "efparse/cache_updater.hpp"
#include "efparse/match.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace efparse;
using testing_support::lexicon;
using testing_support::mock_gateway;

namespace {

const char* kL1 = "connection from 210.202.115.220 at Mon Aug 9 09:12:50 2005";
const char* kL2 = "connection from 261.218.671.604 at Tue Oct 13 02:01:27 2005";
const char* kB1 = "ERROR: Database connection failed - Host: db-primary";
const char* kB2 = "ERROR: Database connection refused - Host: db-cache";

std::vector<Token> toks(std::initializer_list<const char*> texts) {
  std::vector<Token> out;
  for (const char* t : texts) out.push_back(Token::from_text(t));
  return out;
}

Template with_sample(const char* rendered, const char* log) {
  auto t = Template::parse(rendered);
  EXPECT_TRUE(t.add_sample(log));
  return t;
}

SegmentPair pair_of(std::initializer_list<const char*> l, std::initializer_list<const char*> r) {
  SegmentPair p;
  p.left = toks(l);
  p.right = toks(r);
  p.left_end = p.left.size();
  p.right_end = p.right.size();
  return p;
}

std::vector<Token> reassemble(const Template& t, const std::vector<SegmentPair>& pairs, bool left) {
  std::vector<Token> out;
  std::size_t pos = 0;
  for (const auto& p : pairs) {
    const auto begin = left ? p.left_begin : p.right_begin;
    const auto& seg = left ? p.left : p.right;
    for (; pos < begin; ++pos) out.push_back(t.tokens()[pos]);
    out.insert(out.end(), seg.begin(), seg.end());
    pos = left ? p.left_end : p.right_end;
  }
  for (; pos < t.size(); ++pos) out.push_back(t.tokens()[pos]);
  return out;
}

}  // namespace

TEST(PairSegments, LengthMismatchedPair) {
  const auto a = Template::parse("connection from <*> at Mon <*>");
  const auto b = Template::parse("connection from <*> at <*>");
  const auto pairs = pair_segments(a, b);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].left, toks({"Mon", "<*>"}));
  EXPECT_EQ(pairs[0].right, toks({"<*>"}));
  ASSERT_TRUE(pairs[0].anchor_before);
  EXPECT_EQ(pairs[0].anchor_before->text(), "at");
  EXPECT_FALSE(pairs[0].anchor_after);
  EXPECT_EQ(reassemble(a, pairs, true), a.tokens());
  EXPECT_EQ(reassemble(b, pairs, false), b.tokens());
}

TEST(PairSegments, PartialMergePair) {
  const auto pairs = pair_segments(Template::parse(kB1), Template::parse(kB2));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].left, toks({"failed"}));
  EXPECT_EQ(pairs[0].right, toks({"refused"}));
  EXPECT_EQ(pairs[1].left, toks({"db-primary"}));
  EXPECT_EQ(pairs[1].right, toks({"db-cache"}));
}

TEST(PairSegments, IdenticalTemplatesHaveNoPairs) {
  const auto t = Template::parse("a <*> b");
  EXPECT_TRUE(pair_segments(t, t).empty());
}

TEST(PairSegments, ReassemblyProperty) {
  oracle::Rng rng(31);
  const std::vector<std::string> alpha = {"a", "b", "c", "<*>", "d"};
  for (int i = 0; i < 3000; ++i) {
    const auto a = Template::parse(join_tokens(oracle::random_tokens(rng, 1, 8, alpha)));
    const auto b = Template::parse(join_tokens(oracle::random_tokens(rng, 1, 8, alpha)));
    const auto pairs = pair_segments(a, b);
    ASSERT_EQ(reassemble(a, pairs, true), a.tokens()) << a.render() << " | " << b.render();
    ASSERT_EQ(reassemble(b, pairs, false), b.tokens()) << a.render() << " | " << b.render();
    for (const auto& p : pairs) EXPECT_FALSE(p.left.empty() && p.right.empty());
    if (a.same_tokens(b)) EXPECT_TRUE(pairs.empty());
  }
}

TEST(AssessSegment, Gates) {
  EXPECT_EQ(assess_segment(pair_of({"failed"}, {"refused"}), lexicon()), SegmentDecision::Keep);
  EXPECT_EQ(assess_segment(pair_of({"db-primary"}, {"db-cache"}), lexicon()), SegmentDecision::MergeFast);
  EXPECT_EQ(assess_segment(pair_of({"Mon", "<*>"}, {"<*>"}), lexicon()), SegmentDecision::MergeSemantic);
  // Gate 1: differences only at wildcard positions.
  EXPECT_EQ(assess_segment(pair_of({"<*>", "x"}, {"y", "x"}), lexicon()), SegmentDecision::MergeFast);
  // Gate 2: incompatible composition.
  EXPECT_EQ(assess_segment(pair_of({"12"}, {"alice"}), lexicon()), SegmentDecision::Keep);
  // Gate 3: no potential variable.
  EXPECT_EQ(assess_segment(pair_of({"table"}, {"chair"}), lexicon()), SegmentDecision::Keep);
  EXPECT_EQ(assess_segment(pair_of({"17"}, {"42"}), lexicon()), SegmentDecision::MergeFast);
}

TEST(MergeFast, PositionWise) {
  EXPECT_EQ(merge_segment_fast(pair_of({"db-primary"}, {"db-cache"})), toks({"<*>"}));
  EXPECT_EQ(merge_segment_fast(pair_of({"a", "b"}, {"a", "c"})), toks({"a", "<*>"}));
  EXPECT_EQ(merge_segment_fast(pair_of({"<*>"}, {"x"})), toks({"<*>"}));
  EXPECT_EQ(merge_segment_fast(pair_of({"x", "y"}, {"p", "q"})), toks({"<*>", "<*>"}));
  EXPECT_THROW(merge_segment_fast(pair_of({"a"}, {"a", "b"})), std::invalid_argument);
}

TEST(MergeSemantic, AcceptsValidatedAnswer) {
  auto gw = mock_gateway("extract | * | {log}\nmerge | * | <*>\nconfirm | * | \n");
  const auto a = with_sample("connection from <*> at Mon <*>", kL1);
  const auto b = with_sample("connection from <*> at <*>", kL2);
  const auto pairs = pair_segments(a, b);
  ASSERT_EQ(pairs.size(), 1u);
  const auto merged = merge_segment_semantic(pairs[0], a, b, gw.get());
  ASSERT_TRUE(merged);
  EXPECT_EQ(*merged, toks({"<*>"}));
}

TEST(MergeSemantic, RejectsAnswerThatBreaksSamples) {
  auto gw = mock_gateway("extract | * | {log}\nmerge | * | Mon <*>\nconfirm | * | \n");
  const auto a = with_sample("connection from <*> at Mon <*>", kL1);
  const auto b = with_sample("connection from <*> at <*>", kL2);
  EXPECT_FALSE(merge_segment_semantic(pair_segments(a, b)[0], a, b, gw.get()));
}

TEST(MergeSemantic, GatewayFailureMeansNoMerge) {
  auto gw = mock_gateway("extract | * | {log}\nmerge | * | !timeout\nconfirm | * | \n");
  const auto a = with_sample("connection from <*> at Mon <*>", kL1);
  const auto b = with_sample("connection from <*> at <*>", kL2);
  EXPECT_FALSE(merge_segment_semantic(pair_segments(a, b)[0], a, b, gw.get()));
  EXPECT_FALSE(merge_segment_semantic(pair_segments(a, b)[0], a, b, nullptr));
}

TEST(Update, FullMergeOfLengthMismatchedTemplates) {
  auto gw = mock_gateway("extract | * | {log}\nmerge | * | <*>\nconfirm | * | \n");
  CacheUpdater updater(lexicon(), gw.get());
  DualCache cache;
  const auto old_id = cache.insert(with_sample("connection from <*> at Mon <*>", kL1));
  const auto out = updater.update(cache, with_sample("connection from <*> at <*>", kL2));
  ASSERT_EQ(out.kind, MergeOutcome::Kind::FullMerge);
  ASSERT_EQ(out.results.size(), 1u);
  EXPECT_EQ(out.results[0].render(), "connection from <*> at <*>");
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.find(out.target_id)->render(), "connection from <*> at <*>");
  EXPECT_EQ(out.retired, old_id);
  EXPECT_EQ(out.successor, out.target_id);
  EXPECT_FALSE(cache.find(old_id));
  for (const char* log : {kL1, kL2}) EXPECT_TRUE(matches(*cache.find(out.target_id), LogRecord(1, log)));
  EXPECT_TRUE(cache.in_sync());
}

TEST(Update, PartialMergeKeepsVerbs) {
  CacheUpdater updater(lexicon(), nullptr);
  DualCache cache(0.7);
  const auto old_id = cache.insert(with_sample(kB1, kB1));
  const auto out = updater.update(cache, with_sample(kB2, kB2));
  ASSERT_EQ(out.kind, MergeOutcome::Kind::PartialMerge);
  ASSERT_EQ(out.results.size(), 2u);
  EXPECT_EQ(out.results[0].render(), "ERROR: Database connection failed - Host: <*>");
  EXPECT_EQ(out.results[1].render(), "ERROR: Database connection refused - Host: <*>");
  EXPECT_FALSE(cache.find(old_id));
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(cache.find(out.target_id)->render(), "ERROR: Database connection refused - Host: <*>");
  ASSERT_TRUE(out.successor);
  EXPECT_EQ(cache.find(*out.successor)->render(), "ERROR: Database connection failed - Host: <*>");
  EXPECT_FALSE(out.results[0].same_tokens(out.results[1]));
  EXPECT_TRUE(matches(*cache.find(*out.successor), LogRecord(1, kB1)));
  EXPECT_TRUE(cache.in_sync());
}

TEST(Update, PartialMergePairFallsBelowDefaultThreshold) {
  // 7 tokens with two edits: similarity 5/7 < 0.75.
  DualCache cache(0.75);
  cache.insert(Template::parse(kB1));
  EXPECT_FALSE(cache.most_relevant(Template::parse(kB2)));
}

TEST(Update, InsertNewCases) {
  CacheUpdater updater(lexicon(), nullptr);
  DualCache cache;
  auto out = updater.update(cache, Template::parse("a <*> c"));
  EXPECT_EQ(out.kind, MergeOutcome::Kind::InsertNew);
  EXPECT_EQ(cache.size(), 1u);
  // Relevant but every segment kept.
  out = updater.update(cache, Template::parse("Service started ok now"));
  out = updater.update(cache, Template::parse("Service stopped ok now"));
  EXPECT_EQ(out.kind, MergeOutcome::Kind::InsertNew);
  EXPECT_EQ(cache.size(), 3u);
  // Identical template.
  const auto again = updater.update(cache, Template::parse("a <*> c"));
  EXPECT_EQ(again.kind, MergeOutcome::Kind::InsertNew);
  EXPECT_EQ(cache.size(), 3u);
}

TEST(Update, SoundAndMonotoneOnRandomTemplates) {
  oracle::Rng rng(33);
  auto gw = mock_gateway(testing_support::kEchoScript);
  CacheUpdater updater(lexicon(), gw.get());
  const std::vector<std::string> words = {"ERROR", "job", "7", "42", "node-1", "node-2", "failed", "done", "Mon", "x"};
  for (int round = 0; round < 100; ++round) {
    DualCache cache;
    for (int i = 0; i < 25; ++i) {
      const LogRecord log(1, join_tokens(oracle::random_tokens(rng, 3, 6, words)));
      // Abstract a random position so merges have wildcards to work with.
      std::vector<Token> tokens = Template::from_log(log).tokens();
      tokens[rng() % tokens.size()] = Token::wildcard();
      Template t(tokens);
      t.add_sample(log);
      std::vector<std::string> samples = {log.raw};
      for (const auto& [id, c] : cache.templates()) {
        samples.insert(samples.end(), c.sample_logs().begin(), c.sample_logs().end());
      }
      const auto before = cache.size();
      const auto out = updater.update(cache, t);
      ASSERT_TRUE(cache.in_sync());
      ASSERT_TRUE(matches(*cache.find(out.target_id), log));
      ASSERT_LE(cache.size(), before + 1);
      for (const auto& s : samples) {
        bool covered = false;
        for (const auto& [id, c] : cache.templates()) covered = covered || matches(c, LogRecord(1, s));
        ASSERT_TRUE(covered) << s;
      }
    }
  }
}

TEST(Update, Deterministic) {
  auto run = [] {
    auto gw = mock_gateway("extract | * | {log}\nmerge | * | <*>\nconfirm | * | \n");
    CacheUpdater updater(lexicon(), gw.get());
    DualCache cache;
    cache.insert(with_sample("connection from <*> at Mon <*>", kL1));
    const auto out = updater.update(cache, with_sample("connection from <*> at <*>", kL2));
    return std::make_pair(out.results[0].render(), out.target_id.value);
  };
  EXPECT_EQ(run(), run());
}

TEST(UpdateSameLength, MergesPositionWiseWithinBucket) {
  CacheUpdater updater(lexicon(), nullptr);
  DualCache cache;
  cache.insert(Template::parse("job 1 done on node-1 in rack r"));
  const auto out = updater.update_same_length(cache, Template::parse("job 2 done on node-1 in rack s"));
  EXPECT_EQ(out.kind, MergeOutcome::Kind::FullMerge);
  EXPECT_EQ(cache.find(out.target_id)->render(), "job <*> done on node-1 in rack <*>");
  // Similarity 3/5 stays below the threshold.
  const auto far = updater.update_same_length(cache, Template::parse("job 2 done on node-2"));
  EXPECT_EQ(far.kind, MergeOutcome::Kind::InsertNew);
  // Different lengths never merge.
  const auto other = updater.update_same_length(cache, Template::parse("job 3 done"));
  EXPECT_EQ(other.kind, MergeOutcome::Kind::InsertNew);
}
