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

#include "efparse/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>

#include "efparse/lexicon.hpp"

namespace efparse {
namespace {

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used == value.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(key + ": expected a number, got '" + value + "'");
}

long long parse_int(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  const long long v = parse_int(key, value);
  if (v < 0) throw ConfigError(key + ": must not be negative");
  return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = to_lower(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

void check_key(const std::string& key) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "input",        "output_dir",   "ground_truth",       "dump_templates",     "verb_lexicon",
      "wordlist",     "threshold",    "max_demos",          "exemplar_pool_size", "exemplar_threshold",
      "special_chars", "sample_capacity", "correction",     "dual_cache",         "backend",
      "mock_script",  "endpoint",     "model",              "api_key_env",        "temperature",
      "timeout",      "max_retries",  "prompt_dir",
  };
  return keys;
}

std::string env_name(const std::string& key) {
  std::string out = "EFPARSE_";
  for (char c : key) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

Settings parse_config(std::istream& in) {
  Settings s;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
    }
    std::string key(trim(t.substr(0, eq)));
    std::replace(key.begin(), key.end(), '-', '_');
    check_key(key);
    s[key] = std::string(trim(t.substr(eq + 1)));
  }
  return s;
}

Settings read_config_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read config file " + file.string());
  return parse_config(in);
}

std::optional<std::string> system_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

Settings settings_from_env(const EnvLookup& lookup) {
  Settings s;
  for (const auto& key : config_keys()) {
    if (auto v = lookup(env_name(key))) s[key] = *v;
  }
  return s;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "input") c.input = value;
  else if (key == "output_dir") c.output_dir = value;
  else if (key == "ground_truth") c.ground_truth = value.empty() ? std::nullopt : std::optional<std::filesystem::path>(value);
  else if (key == "dump_templates") c.dump_templates = value.empty() ? std::nullopt : std::optional<std::filesystem::path>(value);
  else if (key == "verb_lexicon") c.verb_lexicon = value;
  else if (key == "wordlist") c.wordlist = value;
  else if (key == "threshold") c.pipeline.similarity_threshold = parse_real(key, value);
  else if (key == "max_demos") c.pipeline.max_demonstrations = parse_count(key, value);
  else if (key == "exemplar_pool_size") c.pipeline.exemplar_pool_size = parse_count(key, value);
  else if (key == "exemplar_threshold") c.pipeline.exemplar_threshold = parse_real(key, value);
  else if (key == "special_chars") c.pipeline.special_chars = value;
  else if (key == "sample_capacity") c.pipeline.sample_capacity = parse_count(key, value);
  else if (key == "correction") c.pipeline.correction = parse_bool(key, value);
  else if (key == "dual_cache") c.pipeline.dual_cache = parse_bool(key, value);
  else if (key == "backend") {
    const std::string v = to_lower(value);
    if (v == "http") c.gateway.backend = GatewayConfig::Kind::Http;
    else if (v == "mock") c.gateway.backend = GatewayConfig::Kind::Mock;
    else throw ConfigError("backend: expected http or mock, got '" + value + "'");
  }
  else if (key == "mock_script") c.gateway.mock_script = value;
  else if (key == "endpoint") c.gateway.endpoint = value;
  else if (key == "model") c.gateway.model = value;
  else if (key == "api_key_env") c.gateway.api_key_env = value;
  else if (key == "temperature") c.gateway.temperature = parse_real(key, value);
  else if (key == "timeout") c.gateway.timeout_seconds = parse_real(key, value);
  else if (key == "max_retries") c.gateway.max_retries = static_cast<int>(parse_count(key, value));
  else if (key == "prompt_dir") c.gateway.prompt_dir = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

void validate(const RunConfig& c) {
  const auto in_unit = [](double x) { return x > 0.0 && x <= 1.0; };
  if (!in_unit(c.pipeline.similarity_threshold)) throw ConfigError("threshold must be in (0, 1]");
  if (!in_unit(c.pipeline.exemplar_threshold)) throw ConfigError("exemplar_threshold must be in (0, 1]");
  if (c.pipeline.max_demonstrations < 1) throw ConfigError("max_demos must be at least 1");
  if (c.pipeline.exemplar_pool_size < 1) throw ConfigError("exemplar_pool_size must be at least 1");
  if (c.pipeline.sample_capacity < 1) throw ConfigError("sample_capacity must be at least 1");
  if (c.gateway.timeout_seconds <= 0.0) throw ConfigError("timeout must be positive");
  if (c.gateway.temperature < 0.0) throw ConfigError("temperature must not be negative");
}

RunConfig resolve_config(const Settings& cli, const Settings& env, const Settings& file) {
  Settings merged = file;
  for (const auto& [k, v] : env) merged[k] = v;
  for (const auto& [k, v] : cli) merged[k] = v;
  RunConfig c;
  for (const auto& [k, v] : merged) apply_setting(c, k, v);
  validate(c);
  return c;
}

}  // namespace efparse
