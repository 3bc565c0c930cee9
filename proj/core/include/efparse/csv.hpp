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

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace efparse {

using CsvRow = std::vector<std::string>;

// RFC-4180: quoted fields may hold commas, quotes ("") and line breaks.
// Accepts LF or CRLF record separators. Throws std::runtime_error on an
// unterminated quoted field.
std::vector<CsvRow> read_csv(std::istream& in);

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, const CsvRow& row);

// Position of a header column, or -1.
int csv_column(const CsvRow& header, std::string_view name);

}  // namespace efparse
