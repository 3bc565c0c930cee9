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

#include "efparse/match.hpp"

#include <cstdint>

namespace efparse {
namespace {

// A wildcard compiles to kAny followed by kStar, i.e. "one character, then
// any number more". Literal characters are stored as their byte value.
constexpr int kAny = -1;
constexpr int kStar = -2;

struct Compiled {
  std::vector<int> ops;
  std::vector<std::size_t> wildcard_of;  // op index -> wildcard ordinal
  std::size_t wildcards = 0;
};

Compiled compile(std::string_view rendered) {
  Compiled c;
  c.ops.reserve(rendered.size());
  c.wildcard_of.reserve(rendered.size());
  std::size_t i = 0;
  while (i < rendered.size()) {
    if (rendered.compare(i, kWildcard.size(), kWildcard) == 0) {
      c.ops.push_back(kAny);
      c.wildcard_of.push_back(c.wildcards);
      c.ops.push_back(kStar);
      c.wildcard_of.push_back(c.wildcards);
      ++c.wildcards;
      i += kWildcard.size();
    } else {
      c.ops.push_back(static_cast<unsigned char>(rendered[i]));
      c.wildcard_of.push_back(0);
      ++i;
    }
  }
  return c;
}

}  // namespace

std::optional<ParameterList> match_rendered(std::string_view rendered, std::string_view text) {
  const Compiled c = compile(rendered);
  const auto& ops = c.ops;
  const std::size_t m = ops.size();
  const std::size_t n = text.size();

  std::vector<std::size_t> begin(c.wildcards, 0);
  std::vector<std::size_t> end(c.wildcards, 0);

  // Glob matching with backtracking to the most recent star only. Earlier
  // stars keep their shortest extent, which gives leftmost-shortest captures.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t star = m;  // none
  std::size_t mark = 0;
  while (i < n) {
    if (j < m && ops[j] == kStar) {
      star = j;
      mark = i;
      end[c.wildcard_of[j]] = i;
      ++j;
    } else if (j < m && ops[j] == kAny) {
      begin[c.wildcard_of[j]] = i;
      ++i;
      ++j;
    } else if (j < m && ops[j] == static_cast<unsigned char>(text[i])) {
      ++i;
      ++j;
    } else if (star != m) {
      j = star + 1;
      i = ++mark;
      end[c.wildcard_of[star]] = mark;
    } else {
      return std::nullopt;
    }
  }
  while (j < m && ops[j] == kStar) {
    end[c.wildcard_of[j]] = i;
    ++j;
  }
  if (j != m) return std::nullopt;

  ParameterList params;
  params.reserve(c.wildcards);
  for (std::size_t k = 0; k < c.wildcards; ++k) {
    params.emplace_back(text.substr(begin[k], end[k] - begin[k]));
  }
  return params;
}

std::optional<ParameterList> match_template(const Template& t, const LogRecord& log) {
  if (t.tokens().empty()) return std::nullopt;
  return match_rendered(t.render(), log.normalized);
}

std::string fill_template(std::string_view rendered, const ParameterList& params) {
  std::string out;
  std::size_t k = 0;
  std::size_t i = 0;
  while (i < rendered.size()) {
    if (k < params.size() && rendered.compare(i, kWildcard.size(), kWildcard) == 0) {
      out += params[k++];
      i += kWildcard.size();
    } else {
      out.push_back(rendered[i++]);
    }
  }
  return out;
}

}  // namespace efparse
