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

#include "efparse/app.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "efparse/csv.hpp"
#include "efparse/lexicon.hpp"
#include "efparse/llm_gateway.hpp"
#include "efparse/pipeline.hpp"

namespace efparse {
namespace fs = std::filesystem;
namespace {

bool has_csv_extension(const fs::path& p) {
  return to_lower(p.extension().string()) == ".csv";
}

std::vector<CsvRow> load_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return read_csv(in);
  } catch (const std::runtime_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::uint64_t parse_line_id(const std::string& s, const fs::path& path) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(std::string(trim(s)), &used);
    if (used == trim(s).size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(path.string() + ": bad LineId '" + s + "'");
}

// LineId -> EventTemplate from a structured CSV.
std::map<std::uint64_t, std::string> read_template_column(const fs::path& path) {
  const auto rows = load_csv(path);
  if (rows.empty()) throw InputError(path.string() + ": empty file");
  const int id_col = csv_column(rows.front(), "LineId");
  const int t_col = csv_column(rows.front(), "EventTemplate");
  if (id_col < 0 || t_col < 0) throw InputError(path.string() + ": needs LineId and EventTemplate columns");
  std::map<std::uint64_t, std::string> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() == 1 && row[0].empty()) continue;
    const auto need = static_cast<std::size_t>(std::max(id_col, t_col));
    if (row.size() <= need) throw InputError(path.string() + ": short row " + std::to_string(i + 1));
    const auto id = parse_line_id(row[id_col], path);
    if (!out.emplace(id, row[t_col]).second) {
      throw EvalError(path.string() + ": duplicate LineId " + std::to_string(id));
    }
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string eval_csv(const EvalReport& r) { return EvalReport::csv_header() + "\n" + r.csv_row() + "\n"; }

std::string stats_text(const StreamStats& s) {
  std::ostringstream out;
  out << "lines=" << s.lines << "\nblank_skipped=" << s.blank_skipped << "\ncache_hits=" << s.cache_hits
      << "\nhit_rate=" << std::fixed << std::setprecision(6) << s.hit_rate() << "\nllm_path=" << s.llm_path
      << "\nllm_calls=" << s.llm_calls << "\nllm_failures=" << s.llm_failures
      << "\nextraction_fallbacks=" << s.extraction_fallbacks << "\nfull_merges=" << s.full_merges
      << "\npartial_merges=" << s.partial_merges << "\ncorrections=" << s.corrections
      << "\ntemplates=" << s.templates << "\nseconds=" << s.seconds << "\n";
  return out.str();
}

Prediction prediction_from_results(const std::vector<ParseResult>& results) {
  Prediction p;
  for (const auto& r : results) p[r.line_id] = Predicted{std::to_string(r.template_id.value), r.rendered};
  return p;
}

}  // namespace

std::vector<LogRecord> read_input(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw InputError("input not found: " + path.string());
  std::vector<LogRecord> records;
  if (has_csv_extension(path)) {
    const auto rows = load_csv(path);
    if (rows.empty()) return records;
    const int content = csv_column(rows.front(), "Content");
    const int id_col = csv_column(rows.front(), "LineId");
    if (content < 0) throw InputError(path.string() + ": no Content column");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.size() == 1 && row[0].empty()) continue;
      if (row.size() <= static_cast<std::size_t>(content)) {
        throw InputError(path.string() + ": short row " + std::to_string(i + 1));
      }
      const std::uint64_t id = id_col >= 0 && row.size() > static_cast<std::size_t>(id_col)
                                   ? parse_line_id(row[id_col], path)
                                   : static_cast<std::uint64_t>(i);
      records.emplace_back(id, row[content]);
    }
    return records;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  std::uint64_t n = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    records.emplace_back(++n, line);
  }
  if (in.bad()) throw InputError("read error on " + path.string());
  return records;
}

Prediction read_prediction_csv(const fs::path& path) {
  return prediction_from_templates(read_template_column(path));
}

GroundTruth read_truth_csv(const fs::path& path) { return read_template_column(path); }

void write_parsed_csv(const fs::path& path, const std::vector<ParseResult>& results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_csv_row(out, {"LineId", "Content", "EventTemplate"});
  for (const auto& r : results) write_csv_row(out, {std::to_string(r.line_id), r.raw, r.rendered});
}

int run_parse(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<LogRecord> records;
  try {
    records = read_input(config.input);
  } catch (const InputError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitInput;
  }

  std::unique_ptr<Gateway> gateway;
  try {
    gateway = Gateway::from_config(config.gateway);
  } catch (const GatewayError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitGateway;
  } catch (const std::exception& e) {
    err << "efparse: gateway setup failed: " << e.what() << "\n";
    return kExitGateway;
  }

  try {
    const Lexicon lexicon = config.verb_lexicon.empty() && config.wordlist.empty()
                                ? Lexicon::load_default()
                                : Lexicon::load(config.verb_lexicon.empty() ? data_dir() / "lexicon" / "verbs.txt"
                                                                            : config.verb_lexicon,
                                                config.wordlist.empty() ? data_dir() / "lexicon" / "english_words.txt"
                                                                        : config.wordlist);
    const StreamOutput result = parse_stream(records, lexicon, gateway.get(), config.pipeline);
    if (result.stats.blank_skipped > 0) {
      err << "efparse: warning: skipped " << result.stats.blank_skipped << " blank line(s)\n";
    }

    fs::create_directories(config.output_dir);
    write_parsed_csv(config.output_dir / "parsed.csv", result.results);
    std::string snapshot;
    for (const auto& t : result.templates) snapshot += t + "\n";
    write_text(config.output_dir / "templates.txt", snapshot);
    write_text(config.output_dir / "stats.txt", stats_text(result.stats));
    if (config.dump_templates) {
      if (*config.dump_templates == "-") out << snapshot;
      else write_text(*config.dump_templates, snapshot);
    }
    out << "parsed " << result.stats.lines << " lines into " << result.stats.templates << " templates ("
        << std::fixed << std::setprecision(1) << 100.0 * result.stats.hit_rate() << "% cache hits, "
        << result.stats.llm_calls << " LLM calls, " << std::setprecision(3) << result.stats.seconds << " s)\n";

    if (config.ground_truth) {
      const GroundTruth truth = read_truth_csv(*config.ground_truth);
      const EvalReport report = evaluate(prediction_from_results(result.results), truth, result.stats.seconds);
      write_text(config.output_dir / "eval.txt", report.to_text());
      write_text(config.output_dir / "eval.csv", eval_csv(report));
      out << report.to_text();
    }
  } catch (const EvalError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitLineIds;
  } catch (const InputError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_eval(const fs::path& parsed, const fs::path& truth, const std::optional<fs::path>& output_dir,
             std::ostream& out, std::ostream& err) {
  try {
    const auto start = std::chrono::steady_clock::now();
    const Prediction pred = read_prediction_csv(parsed);
    const GroundTruth gt = read_truth_csv(truth);
    EvalReport report = evaluate(pred, gt);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << report.to_text();
    if (output_dir) {
      fs::create_directories(*output_dir);
      write_text(*output_dir / "eval.txt", report.to_text());
      write_text(*output_dir / "eval.csv", eval_csv(report));
    }
  } catch (const EvalError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitLineIds;
  } catch (const InputError& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "efparse: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace efparse
