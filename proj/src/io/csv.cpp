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
#include "epiqubo/io/csv.hpp"
#include "epiqubo/core/errors.hpp"

#include <fstream>
#include <sstream>

namespace epiqubo
{

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (header[k] == name) {
            return k;
        }
    }
    throw ParseError(source, 1, "missing column '" + std::string(name) + "'");
}

std::vector<std::string> split_csv_line(std::string_view line, const std::string& source, std::size_t line_no)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted    = false;
    bool was_quote = false; // field began with a quote
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    field += '"';
                    ++k;
                }
                else {
                    quoted = false;
                }
            }
            else {
                field += c;
            }
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            was_quote = false;
        }
        else if (c == '"' && field.empty() && !was_quote) {
            quoted    = true;
            was_quote = true;
        }
        else if (was_quote) {
            throw ParseError(source, line_no, "characters after closing quote");
        }
        else {
            field += c;
        }
    }
    if (quoted) {
        throw ParseError(source, line_no, "unterminated quoted field");
    }
    fields.push_back(std::move(field));
    return fields;
}

CsvTable parse_csv(std::string_view text, const std::string& source)
{
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    CsvTable table;
    table.source = source;
    bool have_header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        auto line      = text.substr(0, end);
        text           = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++line_no;
        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            continue;
        }
        auto fields = split_csv_line(line, source, line_no);
        if (!have_header) {
            for (auto& f : fields) {
                const auto first = f.find_first_not_of(' ');
                const auto last  = f.find_last_not_of(' ');
                f = first == std::string::npos ? std::string{} : f.substr(first, last - first + 1);
            }
            table.header = std::move(fields);
            have_header  = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError(source, line_no,
                             "expected " + std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        }
        table.rows.push_back({line_no, std::move(fields)});
    }
    if (!have_header) {
        throw ParseError(source, 1, "missing header row");
    }
    return table;
}

std::string csv_field(std::string_view text)
{
    const bool needs_quotes = text.find_first_of(",\"\r\n") != std::string_view::npos ||
                              (!text.empty() && (text.front() == ' ' || text.back() == ' '));
    if (!needs_quotes) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
}

} // namespace epiqubo
