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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efparse/token.hpp"

namespace efparse {

using ParameterList = std::vector<std::string>;

// Matches a rendered template against a whitespace-normalized line. Every
// "<*>" captures a non-empty run of characters, shortest first; everything
// else matches literally. Returns the captures, or nullopt on mismatch.
std::optional<ParameterList> match_rendered(std::string_view rendered, std::string_view normalized);

std::optional<ParameterList> match_template(const Template& t, const LogRecord& log);

inline bool matches(const Template& t, const LogRecord& log) {
  return match_template(t, log).has_value();
}

// Substitutes parameters into the template's wildcards in order.
std::string fill_template(std::string_view rendered, const ParameterList& params);

}  // namespace efparse
