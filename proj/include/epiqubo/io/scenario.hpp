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

#include "epiqubo/controller/controller.hpp"
#include "epiqubo/io/synthetic.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epiqubo
{

/// A scenario as written by the user, before files are read and the
/// infection rate calibrated. Either the network files or a synthetic
/// profile must be set, and exactly one of lambda and r0.
struct ScenarioConfig {
    std::optional<std::filesystem::path> network; ///< edges CSV
    std::optional<std::filesystem::path> population;
    std::optional<std::filesystem::path> cases;
    std::optional<SyntheticProfile> synthetic;
    std::size_t synthetic_size      = 0;
    std::uint64_t synthetic_seed    = 0;
    /// Used for the initial state when no cases file is given.
    double infected_fraction        = 0.001;

    ModelKind model = ModelKind::SIS;
    std::optional<double> lambda;
    std::optional<double> r0;
    std::optional<double> mu;
    double gamma            = 0.0;
    std::size_t steps       = 30;
    SolverKind solver       = SolverKind::simulated_annealing;
    BuilderKind builder     = BuilderKind::analytic;
    std::uint64_t seed      = 0;
    bool force              = false;
    SolverConfig solver_config;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Sets one key from its text value. Relative paths resolve against
/// `base_dir`. Throws ValidationError for unknown keys and bad values.
void set_scenario_key(ScenarioConfig& config, std::string_view key, std::string_view value,
                      const std::filesystem::path& base_dir = {});

/// `key = value` lines; '#' starts a comment line. Unknown or repeated keys
/// are ParseErrors.
ScenarioConfig parse_scenario(std::string_view text, const std::string& source = "<scenario>",
                              const std::filesystem::path& base_dir = {});

ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Every set key in a fixed order, values in their exact text form, so that
/// parse_scenario(format_scenario(c)) == c.
std::vector<std::pair<std::string, std::string>> scenario_entries(const ScenarioConfig& config);
std::string format_scenario(const ScenarioConfig& config);

/// Throws ValidationError for a missing or conflicting network source or rate.
void check_scenario(const ScenarioConfig& config);

struct ResolvedScenario {
    Scenario scenario;
    EpidemicState initial;
};

/// Loads or generates the network, builds the initial state and calibrates
/// lambda from r0 when requested.
ResolvedScenario resolve_scenario(const ScenarioConfig& config);

} // namespace epiqubo
