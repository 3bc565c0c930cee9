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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "efparse/config.hpp"
#include "efparse/evaluator.hpp"
#include "efparse/token.hpp"

namespace efparse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGateway = 3;
inline constexpr int kExitLineIds = 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw text (one message per line, LineId = line number) or a structured CSV
// with a Content column (and LineId, when present). A file is read as CSV
// when it ends in .csv. Throws InputError if unreadable.
std::vector<LogRecord> read_input(const std::filesystem::path& path);

// parsed.csv written by run_parse: LineId and EventTemplate columns.
Prediction read_prediction_csv(const std::filesystem::path& path);
// Structured ground truth: LineId and EventTemplate columns.
GroundTruth read_truth_csv(const std::filesystem::path& path);

void write_parsed_csv(const std::filesystem::path& path, const std::vector<ParseResult>& results);

// Writes parsed.csv, templates.txt and stats.txt (plus eval.txt and eval.csv
// with a ground truth) to the output directory.
int run_parse(const RunConfig& config, std::ostream& out, std::ostream& err);

// Evaluates a parsed CSV against ground truth, printing the report and, if
// output_dir is set, writing eval.txt and eval.csv there.
int run_eval(const std::filesystem::path& parsed, const std::filesystem::path& truth,
             const std::optional<std::filesystem::path>& output_dir, std::ostream& out, std::ostream& err);

}  // namespace efparse
