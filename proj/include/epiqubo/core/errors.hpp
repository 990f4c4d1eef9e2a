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
#include <stdexcept>
#include <string>

namespace epiqubo
{

/// Bad input: malformed data, dimension or kind mismatch, violated precondition.
/// The CLI maps this family to exit code 1.
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError
{
public:
    DimensionError(const std::string& what, std::size_t expected, std::size_t actual)
        : ValidationError(what + ": expected size " + std::to_string(expected) + ", got " +
                          std::to_string(actual))
    {
    }
};

/// Text input that failed to parse. Carries the 1-based line number.
class ParseError : public ValidationError
{
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : ValidationError(source + ":" + std::to_string(line) + ": " + what)
        , m_line(line)
    {
    }

    std::size_t line() const
    {
        return m_line;
    }

private:
    std::size_t m_line;
};

/// Power iteration did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace epiqubo
