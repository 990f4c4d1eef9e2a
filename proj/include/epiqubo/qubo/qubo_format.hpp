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

#include "epiqubo/qubo/qubo_problem.hpp"

#include <string>
#include <string_view>

namespace epiqubo
{

/// Shortest decimal that parses back to exactly `value` (at most 17
/// significant digits).
std::string format_decimal(double value);

/// Parses a full decimal token; throws ValidationError on trailing junk or
/// non-finite values.
double parse_decimal(std::string_view token);

/// Text form, UTF-8 with LF endings:
///
///     # QUBO M=<int> offset=<decimal>
///     <i> <i> <P_i>        one line per nonzero linear term, ascending i
///     <i> <j> <Q_ij>       one line per nonzero pair, i < j, lexicographic
///
/// Indices are 0-based. Further lines starting with '#' are comments.
std::string export_qubo(const QuboProblem& q);

/// Inverse of export_qubo. Throws ParseError naming the offending line for
/// malformed lines, duplicate entries, out-of-range or lower-triangular indices.
QuboProblem import_qubo(std::string_view text, const std::string& source = "<qubo>");

} // namespace epiqubo
