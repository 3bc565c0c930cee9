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

#include <random>

#include "efparse/match.hpp"
#include "oracles.hpp"

using namespace efparse;

namespace {

std::optional<ParameterList> run(const std::string& t, const std::string& log) {
  return match_template(Template::parse(t), LogRecord(1, log));
}

// Reference matcher: tries every split of the line, shortest capture first.
bool glob_reference(std::string_view pat, std::string_view s, ParameterList& caps) {
  if (pat.empty()) return s.empty();
  if (pat.substr(0, 3) == "<*>") {
    for (std::size_t n = 1; n <= s.size(); ++n) {
      caps.emplace_back(s.substr(0, n));
      if (glob_reference(pat.substr(3), s.substr(n), caps)) return true;
      caps.pop_back();
    }
    return false;
  }
  return !s.empty() && pat.front() == s.front() && glob_reference(pat.substr(1), s.substr(1), caps);
}

}  // namespace

TEST(Match, WorkedExamples) {
  EXPECT_EQ(run("Scheduled snapshot period at <*> seconds.", "Scheduled snapshot period at 10 seconds."),
            ParameterList{"10"});
  EXPECT_EQ(run("User <*> logged in from IP <*>", "User alice logged in from IP 10.0.0.1"),
            (ParameterList{"alice", "10.0.0.1"}));
  EXPECT_FALSE(run("a b", "a c"));
}

TEST(Match, WildcardSpansTokensAndNeverEmpty) {
  EXPECT_EQ(run("connection from <*> at <*>", "connection from 1.2.3.4 at Mon Aug 9 09:12:50 2005"),
            (ParameterList{"1.2.3.4", "Mon Aug 9 09:12:50 2005"}));
  EXPECT_FALSE(run("a <*> b", "a b"));
  EXPECT_EQ(run("blk_<*> x", "blk_-42 x"), ParameterList{"-42"});
  EXPECT_EQ(run("<*>", "  anything   goes "), ParameterList{"anything goes"});
}

TEST(Match, ZeroWildcardsMeansNormalizedEquality) {
  EXPECT_TRUE(run("a b c", "a   b\tc"));
  EXPECT_FALSE(run("a b c", "a b c d"));
}

TEST(Match, FillReproducesNormalizedLog) {
  const std::string t = "User <*> logged in from IP <*>";
  const std::string log = "User  alice logged in from IP 10.0.0.1";
  const auto params = run(t, log);
  ASSERT_TRUE(params);
  EXPECT_EQ(fill_template(t, *params), normalize_whitespace(log));
}

TEST(Match, AgreesWithReferenceGlob) {
  oracle::Rng rng(11);
  const std::vector<std::string> tpl_alpha = {"a", "b", "<*>", "a<*>", "<*>b"};
  const std::vector<std::string> log_alpha = {"a", "b", "ab", "ba", "aa"};
  int accepted = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto t = join_tokens(oracle::random_tokens(rng, 1, 4, tpl_alpha));
    const auto log = join_tokens(oracle::random_tokens(rng, 1, 5, log_alpha));
    ParameterList ref;
    const bool ok = glob_reference(t, log, ref);
    const auto got = match_rendered(t, log);
    ASSERT_EQ(ok, got.has_value()) << t << " / " << log;
    if (ok) {
      ++accepted;
      EXPECT_EQ(fill_template(t, *got), log);
      EXPECT_EQ(got->size(), count_wildcards(t));
    }
  }
  EXPECT_GT(accepted, 100);
}
