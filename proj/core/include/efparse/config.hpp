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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "efparse/llm_gateway.hpp"
#include "efparse/pipeline.hpp"

namespace efparse {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key -> raw value, keys in their canonical snake_case spelling
using Settings = std::map<std::string, std::string>;

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path output_dir = "efparse-out";
  std::optional<std::filesystem::path> ground_truth;
  std::optional<std::filesystem::path> dump_templates;
  // Empty means the bundled lexicon files.
  std::filesystem::path verb_lexicon;
  std::filesystem::path wordlist;
  PipelineOptions pipeline;
  GatewayConfig gateway;
};

// Every key accepted by config files, EFPARSE_<KEY> variables and the CLI.
const std::vector<std::string>& config_keys();

// EFPARSE_ followed by the upper-cased key.
std::string env_name(const std::string& key);

// Flat `key = value` lines; `#` starts a comment line. Throws ConfigError on
// malformed lines or unknown keys.
Settings parse_config(std::istream& in);
Settings read_config_file(const std::filesystem::path& file);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
std::optional<std::string> system_env(const std::string& name);
Settings settings_from_env(const EnvLookup& lookup = system_env);

// Applies one setting. Throws ConfigError on an unknown key or bad value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Throws ConfigError if a field is out of range.
void validate(const RunConfig& config);

// Layering: cli over env over file over defaults.
RunConfig resolve_config(const Settings& cli, const Settings& env, const Settings& file);

}  // namespace efparse
