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
#include "epiqubo/io/network_files.hpp"
#include "epiqubo/core/errors.hpp"
#include "epiqubo/io/csv.hpp"
#include "epiqubo/qubo/qubo_format.hpp"

#include <map>
#include <set>

namespace epiqubo
{

namespace
{

double number(const std::string& token, const CsvTable& table, const CsvRow& row, std::string_view column)
{
    try {
        return parse_decimal(token);
    }
    catch (const ValidationError&) {
        throw ParseError(table.source, row.line, "bad number '" + token + "' in column " + std::string(column));
    }
}

class Resolver
{
public:
    void add(const std::string& location, const std::string& name, std::size_t index)
    {
        m_ids.emplace(location, index);
        if (!name.empty()) {
            m_names.emplace(name, index);
        }
    }

    bool has_id(const std::string& location) const
    {
        return m_ids.contains(location);
    }

    std::size_t resolve(const std::string& ref, const CsvTable& table, const CsvRow& row) const
    {
        if (auto it = m_ids.find(ref); it != m_ids.end()) {
            return it->second;
        }
        if (auto it = m_names.find(ref); it != m_names.end()) {
            return it->second;
        }
        throw ParseError(table.source, row.line, "unknown location '" + ref + "'");
    }

private:
    std::map<std::string, std::size_t> m_ids;
    std::multimap<std::string, std::size_t> m_names;
};

struct PopulationTable {
    std::vector<double> populations;
    std::vector<std::string> names;
    Resolver resolver;
};

PopulationTable read_populations(const CsvTable& table)
{
    const auto loc_col  = table.column("location");
    const auto name_col = table.column("name");
    const auto pop_col  = table.column("population");

    PopulationTable out;
    bool any_name = false;
    for (const auto& row : table.rows) {
        const auto& location = row.fields[loc_col];
        const auto& name     = row.fields[name_col];
        if (location.empty()) {
            throw ParseError(table.source, row.line, "empty location id");
        }
        if (out.resolver.has_id(location)) {
            throw ParseError(table.source, row.line, "duplicate location '" + location + "'");
        }
        const double n = number(row.fields[pop_col], table, row, "population");
        if (!(n > 0.0)) {
            throw ParseError(table.source, row.line, "population must be positive at location '" + location + "'");
        }
        out.resolver.add(location, name, out.populations.size());
        out.populations.push_back(n);
        out.names.push_back(name);
        any_name = any_name || !name.empty();
    }
    if (out.populations.empty()) {
        throw ParseError(table.source, 1, "no locations");
    }
    if (!any_name) {
        out.names.clear();
    }
    return out;
}

} // namespace

LocationNetwork parse_network(std::string_view edges_text, std::string_view population_text,
                              const std::string& edges_source, const std::string& population_source)
{
    const auto pops  = read_populations(parse_csv(population_text, population_source));
    const auto edges = parse_csv(edges_text, edges_source);
    const auto from_col   = edges.column("from");
    const auto to_col     = edges.column("to");
    const auto weight_col = edges.column("weight");

    const auto m = pops.populations.size();
    SquareMatrix weights(m);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& row : edges.rows) {
        const auto i = pops.resolver.resolve(row.fields[from_col], edges, row);
        const auto j = pops.resolver.resolve(row.fields[to_col], edges, row);
        if (i == j) {
            throw ParseError(edges.source, row.line, "diagonal edge at location " + std::to_string(i));
        }
        if (!seen.emplace(i, j).second) {
            throw ParseError(edges.source, row.line,
                             "duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        const double w = number(row.fields[weight_col], edges, row, "weight");
        if (w < 0.0) {
            throw ParseError(edges.source, row.line,
                             "negative weight at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        weights(i, j) = w;
    }
    return LocationNetwork(pops.populations, std::move(weights), pops.names);
}

namespace
{

EpidemicState read_cases(std::string_view text, const LocationNetwork& net, ModelKind kind,
                         const std::string& source, const Resolver& resolver)
{
    const auto table = parse_csv(text, source);
    const auto loc_col      = table.column("location");
    const auto infected_col = table.column("infected");
    std::optional<std::size_t> removed_col;
    for (std::size_t k = 0; k < table.header.size(); ++k) {
        if (table.header[k] == "removed") {
            removed_col = k;
        }
    }

    auto state = EpidemicState::zero(net.size(), kind);
    std::set<std::size_t> seen;
    for (const auto& row : table.rows) {
        const auto i = resolver.resolve(row.fields[loc_col], table, row);
        if (!seen.insert(i).second) {
            throw ParseError(table.source, row.line, "duplicate location " + std::to_string(i));
        }
        const double x = number(row.fields[infected_col], table, row, "infected");
        if (x < 0.0) {
            throw ParseError(table.source, row.line, "negative infected at location " + std::to_string(i));
        }
        state.infected[i] = x;
        if (removed_col) {
            const double y = number(row.fields[*removed_col], table, row, "removed");
            if (y < 0.0) {
                throw ParseError(table.source, row.line, "negative removed at location " + std::to_string(i));
            }
            if (kind == ModelKind::SIS && y != 0.0) {
                throw ParseError(table.source, row.line, "removed counts given for an SIS model");
            }
            if (kind == ModelKind::SIR) {
                (*state.removed)[i] = y;
            }
        }
    }
    const auto report = validate_state(net, kind, state);
    if (!report.ok()) {
        throw ValidationError(report.violations.front());
    }
    return state;
}

} // namespace

EpidemicState parse_cases(std::string_view text, const LocationNetwork& net, ModelKind kind,
                          const std::string& source)
{
    // Without the population file the ids are the indices.
    Resolver resolver;
    for (std::size_t i = 0; i < net.size(); ++i) {
        resolver.add(std::to_string(i), net.names().empty() ? std::string{} : net.names()[i], i);
    }
    return read_cases(text, net, kind, source, resolver);
}

LoadedNetwork load_network(const NetworkFiles& files, ModelKind kind)
{
    const auto population_text = read_text_file(files.population);
    LoadedNetwork loaded{parse_network(read_text_file(files.edges), population_text, files.edges.string(),
                                       files.population.string()),
                         std::nullopt};
    if (files.cases) {
        const auto pops = read_populations(parse_csv(population_text, files.population.string()));
        loaded.initial  = read_cases(read_text_file(*files.cases), loaded.network, kind, files.cases->string(),
                                     pops.resolver);
    }
    return loaded;
}

std::string edges_csv(const LocationNetwork& net)
{
    std::string out = "from,to,weight\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
        for (std::size_t j = 0; j < net.size(); ++j) {
            if (net.weight(i, j) != 0.0) {
                out += std::to_string(i) + "," + std::to_string(j) + "," + format_decimal(net.weight(i, j)) + "\n";
            }
        }
    }
    return out;
}

std::string population_csv(const LocationNetwork& net)
{
    std::string out = "location,name,population\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
        const std::string name = net.names().empty() ? std::string{} : net.names()[i];
        out += std::to_string(i) + "," + csv_field(name) + "," + format_decimal(net.population(i)) + "\n";
    }
    return out;
}

std::string cases_csv(const LocationNetwork& net, const EpidemicState& state)
{
    if (state.infected.size() != net.size()) {
        throw DimensionError("cases", net.size(), state.infected.size());
    }
    std::string out = state.removed ? "location,infected,removed\n" : "location,infected\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
        out += std::to_string(i) + "," + format_decimal(state.infected[i]);
        if (state.removed) {
            out += "," + format_decimal((*state.removed)[i]);
        }
        out += "\n";
    }
    return out;
}

void export_network(const std::filesystem::path& directory, const LocationNetwork& net,
                    const std::optional<EpidemicState>& state)
{
    std::filesystem::create_directories(directory);
    write_text_file(directory / "edges.csv", edges_csv(net));
    write_text_file(directory / "population.csv", population_csv(net));
    if (state) {
        write_text_file(directory / "cases.csv", cases_csv(net, *state));
    }
}

std::string trajectory_csv(const Trajectory& traj)
{
    if (traj.states.empty()) {
        return "t,total_infected\n";
    }
    const auto m        = traj.states.front().infected.size();
    const bool removed  = traj.states.front().removed.has_value();
    std::string out = "t,total_infected";
    for (std::size_t i = 0; i < m; ++i) {
        out += ",x_" + std::to_string(i);
    }
    if (removed) {
        for (std::size_t i = 0; i < m; ++i) {
            out += ",y_" + std::to_string(i);
        }
    }
    out += "\n";
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
        const auto& s = traj.states[t];
        out += std::to_string(t) + "," + format_decimal(s.total_infected());
        for (double x : s.infected) {
            out += "," + format_decimal(x);
        }
        if (s.removed) {
            for (double y : *s.removed) {
                out += "," + format_decimal(y);
            }
        }
        out += "\n";
    }
    return out;
}

Trajectory parse_trajectory_csv(std::string_view text, const std::string& source)
{
    const auto table = parse_csv(text, source);
    if (table.header.size() < 2 || table.header[0] != "t" || table.header[1] != "total_infected") {
        throw ParseError(source, 1, "expected header t,total_infected,x_0,...");
    }
    std::size_t m = 0;
    while (2 + m < table.header.size() && table.header[2 + m] == "x_" + std::to_string(m)) {
        ++m;
    }
    const bool removed = table.header.size() > 2 + m;
    if (removed && table.header.size() != 2 + 2 * m) {
        throw ParseError(source, 1, "expected as many y_ columns as x_ columns");
    }

    Trajectory traj;
    for (const auto& row : table.rows) {
        if (row.fields[0] != std::to_string(traj.states.size())) {
            throw ParseError(source, row.line, "time steps must run 0, 1, 2, ...");
        }
        EpidemicState s;
        for (std::size_t i = 0; i < m; ++i) {
            s.infected.push_back(number(row.fields[2 + i], table, row, table.header[2 + i]));
        }
        if (removed) {
            s.removed.emplace();
            for (std::size_t i = 0; i < m; ++i) {
                s.removed->push_back(number(row.fields[2 + m + i], table, row, table.header[2 + m + i]));
            }
        }
        traj.states.push_back(std::move(s));
    }
    return traj;
}

} // namespace epiqubo
