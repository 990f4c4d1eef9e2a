/*
 * Copyright (C) 2026 The epiqubo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace epiqubo
{

struct CsvRow {
    std::size_t line; ///< 1-based line in the source
    std::vector<std::string> fields;
};

struct CsvTable {
    std::string source;
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    /// Index of a header column; throws ParseError if it is missing.
    std::size_t column(std::string_view name) const;
};

/// RFC 4180 style fields on single lines: double quotes may wrap a field and
/// "" escapes a quote. A header row is required; blank lines are skipped,
/// CRLF endings and a UTF-8 byte order mark are accepted. Every row must
/// have as many fields as the header.
CsvTable parse_csv(std::string_view text, const std::string& source);

/// Splits one line into fields.
std::vector<std::string> split_csv_line(std::string_view line, const std::string& source, std::size_t line_no);

/// Quotes a field when it holds a comma, quote or leading/trailing space.
std::string csv_field(std::string_view text);

/// Throws ValidationError when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace epiqubo
