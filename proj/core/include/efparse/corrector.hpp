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

#include <string>
#include <utility>
#include <vector>

#include "efparse/lexicon.hpp"
#include "efparse/token.hpp"

namespace efparse {

class Gateway;

inline constexpr std::string_view kDefaultSpecialChars = "/\\:.-=@,";

struct CorrectionTrace {
  bool format_applied = false;
  std::vector<std::string> over_specific_tokens;
  std::vector<std::string> over_general_restored;

  bool empty() const noexcept {
    return !format_applied && over_specific_tokens.empty() && over_general_restored.empty();
  }
};

/// Validates model-generated templates before they reach the cache: format
/// repair, then abstraction of missed variables, then restoration of
/// constants that were abstracted by mistake.
class Corrector {
 public:
  Corrector(const Lexicon& lexicon, Gateway* gateway, std::string special_chars = std::string(kDefaultSpecialChars))
      : lexicon_(lexicon), gateway_(gateway), special_chars_(std::move(special_chars)) {}

  // Returns t when it matches the log. Otherwise rebuilds the template from
  // the log: log tokens whose pieces (alphanumeric runs and single symbols)
  // all align with the template's constant text stay, the rest become "<*>".
  Template format_correct(const LogRecord& log, const Template& t) const;

  // Constants with two or more special characters, or mixing letters and
  // digits, in first-seen order.
  std::vector<std::string> suspects(const Template& t) const;

  // Confirms suspects with the gateway and abstracts the confirmed ones,
  // provided the result still matches the log.
  std::pair<Template, std::vector<std::string>> over_specific_correct(const LogRecord& log, const Template& t) const;

  // Turns wildcards back into the aligned log token when that token is
  // ordinary vocabulary (no demonstrations) or a verb (with demonstrations).
  // Needs one template token per log token; otherwise returns t unchanged.
  std::pair<Template, std::vector<std::string>> over_general_correct(const LogRecord& log, const Template& t,
                                                                    bool had_demonstrations) const;

  std::pair<Template, CorrectionTrace> validate(const LogRecord& log, const Template& t_ori,
                                                bool had_demonstrations) const;

  const std::string& special_chars() const noexcept { return special_chars_; }

 private:
  const Lexicon& lexicon_;
  Gateway* gateway_;
  std::string special_chars_;
};

}  // namespace efparse
