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

#include <ostream>
#include <string>
#include <vector>

namespace epiqubo
{

/// Runs one command line (without the program name). Data goes to files or
/// `out`, diagnostics to `err`. Returns 0 on success, 1 for invalid input or
/// usage, 2 for failures while running.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace epiqubo
