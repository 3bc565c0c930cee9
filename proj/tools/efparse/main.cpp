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

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "efparse/app.hpp"
#include "efparse/config.hpp"

namespace {

struct Flags {
  std::map<std::string, std::string> values;

  void bind(CLI::App& cmd, const std::string& flag, const std::string& key, const std::string& help) {
    cmd.add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"efparse: streaming log template extraction"};
  app.require_subcommand(1);

  Flags flags;
  std::string config_file;
  auto* parse = app.add_subcommand("parse", "Parse a log file into templates");
  parse->add_option("--config", config_file, "Flat key = value config file (or EFPARSE_CONFIG)");
  flags.bind(*parse, "-i,--input", "input", "Raw log file or structured CSV with a Content column");
  flags.bind(*parse, "-o,--output-dir", "output_dir", "Output directory (default efparse-out)");
  flags.bind(*parse, "--threshold", "threshold", "Template similarity threshold (default 0.75)");
  flags.bind(*parse, "--max-demos", "max_demos", "Maximum demonstrations per query (default 3)");
  flags.bind(*parse, "--exemplar-pool-size", "exemplar_pool_size", "Recent logs kept for demonstrations");
  flags.bind(*parse, "--exemplar-threshold", "exemplar_threshold", "Demonstration similarity threshold");
  flags.bind(*parse, "--special-chars", "special_chars", "Characters that mark a suspect constant");
  flags.bind(*parse, "--backend", "backend", "LLM backend: http or mock");
  flags.bind(*parse, "--mock-script", "mock_script", "Rule file for the mock backend");
  flags.bind(*parse, "--endpoint", "endpoint", "Chat-completions URL");
  flags.bind(*parse, "--model", "model", "Model name sent to the endpoint");
  flags.bind(*parse, "--api-key-env", "api_key_env", "Variable holding the API key (default EFPARSE_API_KEY)");
  flags.bind(*parse, "--timeout", "timeout", "Request timeout in seconds");
  flags.bind(*parse, "--max-retries", "max_retries", "Retries per request");
  flags.bind(*parse, "--prompt-dir", "prompt_dir", "Directory with extract.txt, merge.txt, confirm.txt");
  flags.bind(*parse, "--verb-lexicon", "verb_lexicon", "Verb list file");
  flags.bind(*parse, "--wordlist", "wordlist", "English vocabulary file");
  flags.bind(*parse, "--ground-truth", "ground_truth", "Structured CSV to evaluate against");
  flags.bind(*parse, "--dump-templates", "dump_templates", "Also write the final templates here (- for stdout)");
  parse->add_flag_callback("--no-correction", [&flags] { flags.values["correction"] = "false"; },
                           "Disable template correction");
  parse->add_flag_callback("--no-dual-cache", [&flags] { flags.values["dual_cache"] = "false"; },
                           "Use only the prefix tree with same-length updates");

  std::string parsed_csv, truth_csv, eval_out;
  auto* eval = app.add_subcommand("eval", "Score a parsed CSV against ground truth");
  eval->add_option("--parsed", parsed_csv, "parsed.csv from efparse parse")->required();
  eval->add_option("--ground-truth", truth_csv, "Structured ground-truth CSV")->required();
  eval->add_option("-o,--output-dir", eval_out, "Write eval.txt and eval.csv here");

  CLI11_PARSE(app, argc, argv);

  if (*eval) {
    return efparse::run_eval(parsed_csv, truth_csv,
                             eval_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(eval_out),
                             std::cout, std::cerr);
  }

  efparse::RunConfig config;
  try {
    efparse::Settings file;
    if (config_file.empty()) {
      if (auto env = efparse::system_env("EFPARSE_CONFIG")) config_file = *env;
    }
    if (!config_file.empty()) file = efparse::read_config_file(config_file);
    config = efparse::resolve_config(flags.values, efparse::settings_from_env(), file);
  } catch (const efparse::ConfigError& e) {
    std::cerr << "efparse: " << e.what() << "\n";
    return efparse::kExitFailure;
  }
  if (config.input.empty()) {
    std::cerr << "efparse: no input given (--input)\n";
    return efparse::kExitInput;
  }
  return efparse::run_parse(config, std::cout, std::cerr);
}
