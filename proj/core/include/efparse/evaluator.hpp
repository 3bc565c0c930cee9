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
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace efparse {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Predicted {
  std::string group;     // anything that identifies the predicted template, e.g. its id
  std::string templ;     // rendered template
};

using Prediction = std::map<std::uint64_t, Predicted>;
using GroundTruth = std::map<std::uint64_t, std::string>;

// Collapses whitespace runs and rewrites wildcard spellings (<*>, <**>,
// {*}, <VAR>, ...) to <*>. Adjacent wildcards are left alone.
std::string canonical_template(std::string_view t);

// Throws EvalError unless both sides cover the same line ids.
void check_line_ids(const Prediction& pred, const GroundTruth& truth);

double grouping_accuracy(const Prediction& pred, const GroundTruth& truth);

struct F1Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

F1Score f1_grouping(const Prediction& pred, const GroundTruth& truth);
double parsing_accuracy(const Prediction& pred, const GroundTruth& truth);
F1Score f1_template(const Prediction& pred, const GroundTruth& truth);

struct EvalReport {
  double ga = 0.0;
  double pa = 0.0;
  double pga = 0.0;
  double rga = 0.0;
  double fga = 0.0;
  double ftp = 0.0;
  double ftr = 0.0;
  double fta = 0.0;
  std::size_t messages = 0;
  std::size_t predicted_templates = 0;
  std::size_t truth_templates = 0;
  double seconds = 0.0;

  std::string to_text() const;
  static std::string csv_header();
  std::string csv_row() const;
};

EvalReport evaluate(const Prediction& pred, const GroundTruth& truth, double seconds = 0.0);

// Groups by template string, for predictions that carry no ids.
Prediction prediction_from_templates(const GroundTruth& templates);

}  // namespace efparse
