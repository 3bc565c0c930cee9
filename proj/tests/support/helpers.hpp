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
#include <memory>
#include <string>

#include "efparse/lexicon.hpp"
#include "efparse/llm_gateway.hpp"

namespace testing_support {

inline const efparse::Lexicon& lexicon() {
  static const efparse::Lexicon l = efparse::Lexicon::load_default();
  return l;
}

inline std::unique_ptr<efparse::Gateway> mock_gateway(std::string_view script) {
  return std::make_unique<efparse::Gateway>(
      std::make_unique<efparse::MockBackend>(efparse::MockScript::parse(script)), efparse::PromptSet::load_default());
}

inline efparse::MockBackend& mock_of(efparse::Gateway& g) { return dynamic_cast<efparse::MockBackend&>(g.backend()); }

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(EFPARSE_FIXTURE_DIR) / name; }

inline std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::path(EFPARSE_TEST_TMP) / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

// Mock answers that never change anything: identity extraction, left-side
// merge, no confirmed suspects.
inline constexpr std::string_view kEchoScript =
    "extract | * | {log}\n"
    "merge | * | {left}\n"
    "confirm | * | \n";

}  // namespace testing_support
