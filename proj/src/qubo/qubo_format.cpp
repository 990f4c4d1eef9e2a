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
#include "epiqubo/qubo/qubo_format.hpp"
#include "epiqubo/core/errors.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace epiqubo
{

namespace
{

std::vector<std::string_view> split_whitespace(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        const auto start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

std::size_t parse_index(std::string_view token)
{
    std::size_t value = 0;
    const auto* end   = token.data() + token.size();
    auto [ptr, ec]    = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError("expected a nonnegative integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::string_view strip_prefix(std::string_view token, std::string_view prefix)
{
    if (token.substr(0, prefix.size()) != prefix) {
        throw ValidationError("expected '" + std::string(prefix) + "...', got '" + std::string(token) + "'");
    }
    return token.substr(prefix.size());
}

} // namespace

std::string format_decimal(double value)
{
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format a decimal");
    }
    return std::string(buffer, ptr);
}

double parse_decimal(std::string_view token)
{
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double value    = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec]  = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || token.empty()) {
        throw ValidationError("expected a decimal number, got '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ValidationError("non-finite value '" + std::string(token) + "'");
    }
    return value;
}

std::string export_qubo(const QuboProblem& q)
{
    std::ostringstream os;
    os << "# QUBO M=" << q.size() << " offset=" << format_decimal(q.offset()) << '\n';
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.linear(i) != 0.0) {
            os << i << ' ' << i << ' ' << format_decimal(q.linear(i)) << '\n';
        }
    }
    for (const auto& term : q.quadratic_terms()) {
        os << term.i << ' ' << term.j << ' ' << format_decimal(term.value) << '\n';
    }
    return os.str();
}

QuboProblem import_qubo(std::string_view text, const std::string& source)
{
    std::size_t line_no = 0;
    std::size_t pos     = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size()) {
            return false;
        }
        const auto end = text.find('\n', pos);
        line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos  = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        return true;
    };

    std::string_view line;
    if (!next_line(line)) {
        throw ParseError(source, 1, "empty input, expected '# QUBO M=<int> offset=<decimal>'");
    }

    QuboProblem q;
    try {
        const auto header = split_whitespace(line);
        if (header.size() != 4 || header[0] != "#" || header[1] != "QUBO") {
            throw ValidationError("expected header '# QUBO M=<int> offset=<decimal>'");
        }
        const auto size   = parse_index(strip_prefix(header[2], "M="));
        const auto offset = parse_decimal(strip_prefix(header[3], "offset="));
        q                 = QuboProblem(size, offset);
    }
    catch (const ParseError&) {
        throw;
    }
    catch (const ValidationError& e) {
        throw ParseError(source, line_no, e.what());
    }

    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (next_line(line)) {
        const auto tokens = split_whitespace(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        try {
            if (tokens.size() != 3) {
                throw ValidationError("expected '<i> <j> <value>', got " + std::to_string(tokens.size()) +
                                      " fields");
            }
            const auto i     = parse_index(tokens[0]);
            const auto j     = parse_index(tokens[1]);
            const auto value = parse_decimal(tokens[2]);
            if (i >= q.size() || j >= q.size()) {
                throw ValidationError("index out of range for M=" + std::to_string(q.size()));
            }
            if (i > j) {
                throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") must be written with i <= j");
            }
            if (!seen.emplace(i, j).second) {
                throw ValidationError("duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (i == j) {
                q.set_linear(i, value);
            }
            else {
                q.set_quadratic(i, j, value);
            }
        }
        catch (const ValidationError& e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    return q;
}

} // namespace epiqubo
