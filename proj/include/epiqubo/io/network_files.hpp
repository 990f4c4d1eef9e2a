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

#include "epiqubo/core/epidemic.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace epiqubo
{

// CSV schemas, header row required:
//   edges        from,to,weight
//   populations  location,name,population
//   cases        location,infected[,removed]
// Locations are indexed in population-file order. A reference in the edges
// or cases file matches a `location` value first, then a `name`.

struct NetworkFiles {
    std::filesystem::path edges;
    std::filesystem::path population;
    std::optional<std::filesystem::path> cases;
};

struct LoadedNetwork {
    LocationNetwork network;
    std::optional<EpidemicState> initial; ///< present when a cases file was given
};

/// Builds the network from the two CSV documents. Pairs without an edge row
/// get weight 0; weights are taken as directed. Throws ParseError for
/// unknown references, duplicate edges or locations, diagonal edges,
/// negative weights and nonpositive populations.
LocationNetwork parse_network(std::string_view edges_csv, std::string_view population_csv,
                              const std::string& edges_source = "<edges>",
                              const std::string& population_source = "<population>");

/// Locations absent from the file start at zero. A missing removed column
/// means y = 0. Throws ValidationError when a state leaves [0, n_i].
EpidemicState parse_cases(std::string_view cases_csv, const LocationNetwork& net, ModelKind kind,
                          const std::string& source = "<cases>");

LoadedNetwork load_network(const NetworkFiles& files, ModelKind kind);

/// Nonzero weights only, row-major. Numbers use the shortest exact decimal,
/// so parse_network(edges_csv(n), population_csv(n)) == n.
std::string edges_csv(const LocationNetwork& net);
std::string population_csv(const LocationNetwork& net);
std::string cases_csv(const LocationNetwork& net, const EpidemicState& state);

/// Writes edges.csv and population.csv (and cases.csv when a state is given)
/// into `directory`, creating it if needed.
void export_network(const std::filesystem::path& directory, const LocationNetwork& net,
                    const std::optional<EpidemicState>& state = std::nullopt);

/// One row per time step: t,total_infected,x_0..x_{M-1}[,y_0..y_{M-1}].
std::string trajectory_csv(const Trajectory& traj);

/// Inverse of trajectory_csv (states only).
Trajectory parse_trajectory_csv(std::string_view text, const std::string& source = "<trajectory>");

} // namespace epiqubo
