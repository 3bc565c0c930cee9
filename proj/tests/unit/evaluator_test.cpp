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

#include "efparse/evaluator.hpp"
#include "oracles.hpp"

using namespace efparse;

namespace {

Prediction pred(std::initializer_list<std::tuple<std::uint64_t, const char*, const char*>> rows) {
  Prediction p;
  for (const auto& [id, g, t] : rows) p[id] = Predicted{g, t};
  return p;
}

}  // namespace

TEST(Canonical, WhitespaceAndWildcardSpellings) {
  EXPECT_EQ(canonical_template("  a   <*>\tb "), "a <*> b");
  EXPECT_EQ(canonical_template("a <**> {*} <VAR> <var>"), "a <*> <*> <*> <*>");
  EXPECT_EQ(canonical_template("blk_{*} <*><*>"), "blk_<*> <*><*>");
  EXPECT_EQ(canonical_template("<a> {x}"), "<a> {x}");
}

TEST(GroupingAccuracy, Examples) {
  const GroundTruth truth = {{1, "A"}, {2, "A"}, {3, "B"}, {4, "B"}};
  EXPECT_DOUBLE_EQ(grouping_accuracy(pred({{1, "x", "A"}, {2, "x", "A"}, {3, "y", "B"}, {4, "y", "B"}}), truth), 1.0);
  EXPECT_DOUBLE_EQ(grouping_accuracy(pred({{1, "p", ""}, {2, "q", ""}, {3, "r", ""}, {4, "r", ""}}), truth), 0.5);
  EXPECT_DOUBLE_EQ(grouping_accuracy(pred({{1, "z", ""}, {2, "z", ""}, {3, "z", ""}, {4, "z", ""}}), truth), 0.0);
}

TEST(GroupingAccuracy, LineIdMismatchThrows) {
  const GroundTruth truth = {{1, "A"}, {2, "A"}};
  EXPECT_THROW(grouping_accuracy(pred({{1, "x", "A"}}), truth), EvalError);
  EXPECT_THROW(grouping_accuracy(pred({{1, "x", "A"}, {3, "x", "A"}}), truth), EvalError);
}

TEST(F1Grouping, Examples) {
  const GroundTruth truth = {{1, "A"}, {2, "A"}, {3, "B"}, {4, "B"}};
  auto perfect = f1_grouping(pred({{1, "x", ""}, {2, "x", ""}, {3, "y", ""}, {4, "y", ""}}), truth);
  EXPECT_DOUBLE_EQ(perfect.f1, 1.0);
  auto partial = f1_grouping(pred({{1, "p", ""}, {2, "q", ""}, {3, "r", ""}, {4, "r", ""}}), truth);
  EXPECT_DOUBLE_EQ(partial.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(partial.recall, 0.5);
  EXPECT_DOUBLE_EQ(partial.f1, 0.4);
  auto none = f1_grouping(pred({{1, "z", ""}, {2, "z", ""}, {3, "z", ""}, {4, "z", ""}}), truth);
  EXPECT_EQ(none.f1, 0.0);
  EXPECT_EQ(none.precision, 0.0);
}

TEST(ParsingAccuracy, Examples) {
  const GroundTruth truth = {{1, "a <*>"}, {2, "a <*>"}, {3, "b <*>"}, {4, "b <*>"}};
  EXPECT_DOUBLE_EQ(parsing_accuracy(pred({{1, "", "a <*>"}, {2, "", "a  {*}"}, {3, "", "b <*>"}, {4, "", "b <*>"}}), truth), 1.0);
  EXPECT_DOUBLE_EQ(parsing_accuracy(pred({{1, "", "a <*>"}, {2, "", "a <*>"}, {3, "", "b <*>"}, {4, "", "b 7"}}), truth), 0.75);
  const GroundTruth proc = {{1, "Process <*> terminated with exit code <*>"}};
  EXPECT_DOUBLE_EQ(parsing_accuracy(pred({{1, "", "Process apache2 terminated with exit code <*>"}}), proc), 0.0);
}

TEST(F1Template, Examples) {
  const GroundTruth truth = {{1, "A <*>"}, {2, "A <*>"}, {3, "B"}};
  EXPECT_DOUBLE_EQ(f1_template(pred({{1, "1", "A <*>"}, {2, "1", "A <*>"}, {3, "2", "B"}}), truth).f1, 1.0);
  // Grouping right, string wrong.
  const auto wrong = f1_template(pred({{1, "1", "A x"}, {2, "1", "A x"}, {3, "2", "B"}}), truth);
  EXPECT_DOUBLE_EQ(wrong.precision, 0.5);
  EXPECT_DOUBLE_EQ(wrong.recall, 0.5);
  EXPECT_DOUBLE_EQ(wrong.f1, 0.5);
}

TEST(Evaluate, ReportFields) {
  const GroundTruth truth = {{1, "A"}, {2, "A"}, {3, "B"}, {4, "B"}};
  const auto r = evaluate(pred({{1, "p", "A"}, {2, "q", "A"}, {3, "r", "B"}, {4, "r", "B"}}), truth, 1.5);
  EXPECT_DOUBLE_EQ(r.ga, 0.5);
  EXPECT_DOUBLE_EQ(r.pa, 1.0);
  EXPECT_DOUBLE_EQ(r.fga, 0.4);
  EXPECT_EQ(r.predicted_templates, 3u);
  EXPECT_EQ(r.truth_templates, 2u);
  EXPECT_EQ(r.messages, 4u);
  EXPECT_NE(r.to_text().find("GA=0.500000"), std::string::npos);
  EXPECT_EQ(EvalReport::csv_header().substr(0, 6), "GA,PA,");
  EXPECT_EQ(r.csv_row().substr(0, 9), "0.500000,");
}

TEST(EvaluatorProperty, MatchesBruteForceOracle) {
  oracle::Rng rng(71);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n_templates = 1 + rng() % 10;
    const std::size_t n_messages = 1 + rng() % 100;
    std::vector<std::string> truth_templates;
    for (std::size_t k = 0; k < n_templates; ++k) truth_templates.push_back("t" + std::to_string(k) + " <*>");
    std::vector<oracle::Line> lines;
    GroundTruth truth;
    Prediction p;
    for (std::size_t i = 0; i < n_messages; ++i) {
      const auto& t = truth_templates[rng() % n_templates];
      const std::size_t g = rng() % (n_templates + 2);
      // Mostly consistent predictions so that correct groups occur.
      const std::string group = rng() % 4 ? t : "g" + std::to_string(g);
      const std::string templ = rng() % 5 ? group : group + " x";
      const std::uint64_t id = i + 1;
      lines.push_back({id, group, templ, t});
      truth[id] = t;
      p[id] = Predicted{group, templ};
    }
    const auto report = evaluate(p, truth);
    ASSERT_EQ(report.ga, oracle::ga(lines));
    ASSERT_EQ(report.pa, oracle::pa(lines));
    const auto g = oracle::group_f1(lines, false);
    ASSERT_EQ(report.pga, g.precision);
    ASSERT_EQ(report.rga, g.recall);
    ASSERT_EQ(report.fga, g.f1);
    ASSERT_EQ(report.fta, oracle::group_f1(lines, true).f1);
    EXPECT_LE(report.fta, report.fga);
  }
}

TEST(EvaluatorProperty, PerfectAndRelabelInvariant) {
  oracle::Rng rng(72);
  for (int round = 0; round < 100; ++round) {
    GroundTruth truth;
    Prediction same, relabeled;
    for (std::uint64_t i = 1; i <= 50; ++i) {
      const std::string t = "t" + std::to_string(rng() % 7) + " <*>";
      truth[i] = t;
      same[i] = Predicted{t, t};
      relabeled[i] = Predicted{"id-" + std::to_string(std::hash<std::string>{}(t) % 9973), t};
    }
    for (const auto* pr : {&same, &relabeled}) {
      const auto r = evaluate(*pr, truth);
      EXPECT_EQ(r.ga, 1.0);
      EXPECT_EQ(r.pa, 1.0);
      EXPECT_EQ(r.fga, 1.0);
      EXPECT_EQ(r.fta, 1.0);
    }
  }
}
