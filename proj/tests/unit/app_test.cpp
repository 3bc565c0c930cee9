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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "efparse/app.hpp"
#include "efparse/csv.hpp"
#include "helpers.hpp"

using namespace efparse;
using testing_support::fixture;
using testing_support::scratch;

namespace {

RunConfig fixture_config(const std::filesystem::path& out) {
  RunConfig c;
  c.input = fixture("corpus.log");
  c.output_dir = out;
  c.gateway.mock_script = fixture("mock.rules");
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST(App, ParseFixtureWritesOutputsAndEvaluates) {
  const auto dir = scratch("app_parse");
  auto c = fixture_config(dir);
  c.ground_truth = fixture("ground_truth.csv");
  std::ostringstream out, err;
  ASSERT_EQ(run_parse(c, out, err), kExitOk) << err.str();
  for (const char* f : {"parsed.csv", "templates.txt", "stats.txt", "eval.txt", "eval.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_NE(out.str().find("GA=1.000000"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("FTA=1.000000"), std::string::npos);
  std::ifstream templates(dir / "templates.txt");
  std::size_t n = 0;
  for (std::string line; std::getline(templates, line);) ++n;
  EXPECT_EQ(n, 20u);
}

TEST(App, OutputsAreByteIdenticalAcrossRuns) {
  const auto a = scratch("app_det_a");
  const auto b = scratch("app_det_b");
  std::ostringstream out, err;
  ASSERT_EQ(run_parse(fixture_config(a), out, err), kExitOk);
  ASSERT_EQ(run_parse(fixture_config(b), out, err), kExitOk);
  EXPECT_EQ(slurp(a / "parsed.csv"), slurp(b / "parsed.csv"));
  EXPECT_EQ(slurp(a / "templates.txt"), slurp(b / "templates.txt"));
}

TEST(App, MissingInputIsInputError) {
  auto c = fixture_config(scratch("app_missing"));
  c.input = "/nonexistent/input.log";
  std::ostringstream out, err;
  EXPECT_EQ(run_parse(c, out, err), kExitInput);
  EXPECT_FALSE(err.str().empty());
  EXPECT_THROW(read_input(c.input), InputError);
}

TEST(App, HttpWithoutKeyIsGatewayError) {
  auto c = fixture_config(scratch("app_http"));
  c.gateway.backend = GatewayConfig::Kind::Http;
  c.gateway.api_key_env = "EFPARSE_TEST_KEY_THAT_IS_NOT_SET";
  ::unsetenv(c.gateway.api_key_env.c_str());
  std::ostringstream out, err;
  EXPECT_EQ(run_parse(c, out, err), kExitGateway);
}

TEST(App, EvalIdenticalFilesScoresOne) {
  const auto dir = scratch("app_eval_same");
  std::ostringstream out, err;
  ASSERT_EQ(run_eval(fixture("ground_truth.csv"), fixture("ground_truth.csv"), dir, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("GA=1.000000"), std::string::npos);
  EXPECT_NE(out.str().find("PA=1.000000"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "eval.csv"));
}

TEST(App, EvalHalfWrongGrouping) {
  const auto dir = scratch("app_eval_half");
  write(dir / "truth.csv", "LineId,EventTemplate\n1,A <*>\n2,A <*>\n3,B <*>\n4,B <*>\n");
  write(dir / "parsed.csv", "LineId,EventTemplate\n1,P\n2,Q\n3,B <*>\n4,B <*>\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_eval(dir / "parsed.csv", dir / "truth.csv", std::nullopt, out, err), kExitOk);
  EXPECT_NE(out.str().find("GA=0.500000"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("PA=0.500000"), std::string::npos);
}

TEST(App, EvalLineIdMismatch) {
  const auto dir = scratch("app_eval_ids");
  write(dir / "truth.csv", "LineId,EventTemplate\n1,A\n2,A\n");
  write(dir / "parsed.csv", "LineId,EventTemplate\n1,A\n");
  write(dir / "dup.csv", "LineId,EventTemplate\n1,A\n1,A\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_eval(dir / "parsed.csv", dir / "truth.csv", std::nullopt, out, err), kExitLineIds);
  EXPECT_EQ(run_eval(dir / "dup.csv", dir / "truth.csv", std::nullopt, out, err), kExitLineIds);
  EXPECT_EQ(run_eval(dir / "absent.csv", dir / "truth.csv", std::nullopt, out, err), kExitInput);
}

TEST(App, ReadsStructuredCsvInput) {
  const auto dir = scratch("app_csv_in");
  write(dir / "in.csv", "LineId,Date,Content\r\n7,x,\"job 1, done\"\r\n9,y,job 2 done\r\n");
  const auto recs = read_input(dir / "in.csv");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].line_id, 7u);
  EXPECT_EQ(recs[0].raw, "job 1, done");
  EXPECT_EQ(recs[1].line_id, 9u);
  write(dir / "raw.log", "a b\r\n\r\nc d\n");
  const auto raw = read_input(dir / "raw.log");
  ASSERT_EQ(raw.size(), 3u);
  EXPECT_EQ(raw[2].line_id, 3u);
  EXPECT_EQ(raw[0].raw, "a b");
  write(dir / "nocontent.csv", "LineId,Text\n1,a\n");
  EXPECT_THROW(read_input(dir / "nocontent.csv"), InputError);
}

TEST(App, ParsedCsvRoundTrip) {
  const auto dir = scratch("app_parsed_rt");
  std::ostringstream out, err;
  ASSERT_EQ(run_parse(fixture_config(dir), out, err), kExitOk);
  const auto pred = read_prediction_csv(dir / "parsed.csv");
  const auto truth = read_truth_csv(fixture("ground_truth.csv"));
  EXPECT_EQ(pred.size(), truth.size());
  EXPECT_DOUBLE_EQ(evaluate(pred, truth).pa, 1.0);
}
