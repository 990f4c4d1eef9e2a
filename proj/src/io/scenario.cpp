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
#include "epiqubo/io/scenario.hpp"
#include "epiqubo/core/errors.hpp"
#include "epiqubo/core/spectral.hpp"
#include "epiqubo/io/csv.hpp"
#include "epiqubo/io/network_files.hpp"
#include "epiqubo/qubo/qubo_format.hpp"

#include <charconv>
#include <set>

namespace epiqubo
{

namespace
{

std::string_view trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value)
{
    std::uint64_t out = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || end != value.data() + value.size() || value.empty()) {
        throw ValidationError(std::string(key) + ": expected a nonnegative integer, got '" + std::string(value) + "'");
    }
    return out;
}

double parse_real(std::string_view key, std::string_view value)
{
    try {
        return parse_decimal(value);
    }
    catch (const ValidationError&) {
        throw ValidationError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
    }
}

bool parse_bool(std::string_view key, std::string_view value)
{
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ValidationError(std::string(key) + ": expected true or false, got '" + std::string(value) + "'");
}

std::filesystem::path parse_path(std::string_view value, const std::filesystem::path& base_dir)
{
    std::filesystem::path p{std::string(value)};
    if (p.is_relative() && !base_dir.empty()) {
        p = base_dir / p;
    }
    return p.lexically_normal();
}

} // namespace

void set_scenario_key(ScenarioConfig& c, std::string_view key, std::string_view raw, const std::filesystem::path& base_dir)
{
    const auto value = trim(raw);
    auto& sc = c.solver_config;
    if (key == "network") {
        c.network = parse_path(value, base_dir);
    }
    else if (key == "population") {
        c.population = parse_path(value, base_dir);
    }
    else if (key == "cases") {
        c.cases = parse_path(value, base_dir);
    }
    else if (key == "synthetic") {
        c.synthetic = parse_synthetic_profile(value);
    }
    else if (key == "synthetic_size") {
        c.synthetic_size = parse_unsigned(key, value);
    }
    else if (key == "synthetic_seed") {
        c.synthetic_seed = parse_unsigned(key, value);
    }
    else if (key == "infected_fraction") {
        c.infected_fraction = parse_real(key, value);
    }
    else if (key == "model") {
        c.model = parse_model_kind(value);
    }
    else if (key == "lambda") {
        c.lambda = parse_real(key, value);
    }
    else if (key == "r0") {
        c.r0 = parse_real(key, value);
    }
    else if (key == "mu") {
        c.mu = parse_real(key, value);
    }
    else if (key == "gamma") {
        c.gamma = parse_real(key, value);
    }
    else if (key == "steps") {
        c.steps = parse_unsigned(key, value);
    }
    else if (key == "solver") {
        c.solver = parse_solver_kind(value);
    }
    else if (key == "builder") {
        c.builder = parse_builder_kind(value);
    }
    else if (key == "seed") {
        c.seed = parse_unsigned(key, value);
    }
    else if (key == "force") {
        c.force = parse_bool(key, value);
    }
    else if (key == "budget") {
        sc.budget = parse_unsigned(key, value);
    }
    else if (key == "restarts") {
        sc.restarts = parse_unsigned(key, value);
    }
    else if (key == "threads") {
        sc.threads = parse_unsigned(key, value);
    }
    else if (key == "sa_initial_temperature") {
        sc.annealing.initial_temperature = parse_real(key, value);
    }
    else if (key == "sa_final_ratio") {
        sc.annealing.final_ratio = parse_real(key, value);
    }
    else if (key == "sa_cooling") {
        sc.annealing.cooling = parse_real(key, value);
    }
    else if (key == "sa_sweeps") {
        sc.annealing.sweeps = parse_unsigned(key, value);
    }
    else if (key == "tabu_tenure") {
        sc.tabu.tenure = parse_unsigned(key, value);
    }
    else if (key == "tabu_stagnation") {
        sc.tabu.stagnation = parse_unsigned(key, value);
    }
    else if (key == "ga_population") {
        sc.genetic.population = parse_unsigned(key, value);
    }
    else if (key == "ga_crossover") {
        sc.genetic.crossover = parse_real(key, value);
    }
    else if (key == "ga_mutation") {
        sc.genetic.mutation = parse_real(key, value);
    }
    else if (key == "ga_generations") {
        sc.genetic.generations = parse_unsigned(key, value);
    }
    else if (key == "ga_tournament") {
        sc.genetic.tournament = parse_unsigned(key, value);
    }
    else {
        throw ValidationError("unknown scenario key '" + std::string(key) + "'");
    }
}

ScenarioConfig parse_scenario(std::string_view text, const std::string& source, const std::filesystem::path& base_dir)
{
    ScenarioConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        const auto line = trim(text.substr(0, end));
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(source, line_no, "expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        if (!seen.emplace(key).second) {
            throw ParseError(source, line_no, "repeated key '" + std::string(key) + "'");
        }
        try {
            set_scenario_key(config, key, line.substr(eq + 1), base_dir);
        }
        catch (const ParseError&) {
            throw;
        }
        catch (const ValidationError& e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    return parse_scenario(read_text_file(path), path.string(), std::filesystem::absolute(path).parent_path());
}

std::vector<std::pair<std::string, std::string>> scenario_entries(const ScenarioConfig& c)
{
    std::vector<std::pair<std::string, std::string>> out;
    auto put = [&](const char* key, std::string value) { out.emplace_back(key, std::move(value)); };
    auto count = [](std::uint64_t v) { return std::to_string(v); };
    const auto& sc = c.solver_config;

    if (c.network) {
        put("network", c.network->string());
    }
    if (c.population) {
        put("population", c.population->string());
    }
    if (c.cases) {
        put("cases", c.cases->string());
    }
    if (c.synthetic) {
        put("synthetic", std::string(to_string(*c.synthetic)));
        put("synthetic_size", count(c.synthetic_size));
        put("synthetic_seed", count(c.synthetic_seed));
    }
    put("infected_fraction", format_decimal(c.infected_fraction));
    put("model", std::string(to_string(c.model)));
    if (c.lambda) {
        put("lambda", format_decimal(*c.lambda));
    }
    if (c.r0) {
        put("r0", format_decimal(*c.r0));
    }
    if (c.mu) {
        put("mu", format_decimal(*c.mu));
    }
    put("gamma", format_decimal(c.gamma));
    put("steps", count(c.steps));
    put("solver", std::string(to_string(c.solver)));
    put("builder", std::string(to_string(c.builder)));
    put("seed", count(c.seed));
    put("force", c.force ? "true" : "false");
    put("budget", count(sc.budget));
    put("restarts", count(sc.restarts));
    put("threads", count(sc.threads));
    if (sc.annealing.initial_temperature) {
        put("sa_initial_temperature", format_decimal(*sc.annealing.initial_temperature));
    }
    put("sa_final_ratio", format_decimal(sc.annealing.final_ratio));
    put("sa_cooling", format_decimal(sc.annealing.cooling));
    put("sa_sweeps", count(sc.annealing.sweeps));
    if (sc.tabu.tenure) {
        put("tabu_tenure", count(*sc.tabu.tenure));
    }
    if (sc.tabu.stagnation) {
        put("tabu_stagnation", count(*sc.tabu.stagnation));
    }
    if (sc.genetic.population) {
        put("ga_population", count(*sc.genetic.population));
    }
    put("ga_crossover", format_decimal(sc.genetic.crossover));
    if (sc.genetic.mutation) {
        put("ga_mutation", format_decimal(*sc.genetic.mutation));
    }
    put("ga_generations", count(sc.genetic.generations));
    put("ga_tournament", count(sc.genetic.tournament));
    return out;
}

std::string format_scenario(const ScenarioConfig& config)
{
    std::string out;
    for (const auto& [key, value] : scenario_entries(config)) {
        out += key + " = " + value + "\n";
    }
    return out;
}

void check_scenario(const ScenarioConfig& c)
{
    const bool files = c.network || c.population;
    if (files && c.synthetic) {
        throw ValidationError("give either network files or a synthetic profile, not both");
    }
    if (!files && !c.synthetic) {
        throw ValidationError("no network: set network and population, or synthetic and synthetic_size");
    }
    if (files && !(c.network && c.population)) {
        throw ValidationError("network files need both the edges and the population file");
    }
    if (c.synthetic && c.synthetic_size == 0) {
        throw ValidationError("synthetic_size must be >= 1");
    }
    if (c.synthetic && c.cases) {
        throw ValidationError("a cases file needs network files, not a synthetic profile");
    }
    if (c.lambda && c.r0) {
        throw ValidationError("lambda and r0 are mutually exclusive");
    }
    if (!c.lambda && !c.r0) {
        throw ValidationError("set lambda or r0");
    }
    if (!c.mu) {
        throw ValidationError("set mu");
    }
}

ResolvedScenario resolve_scenario(const ScenarioConfig& c)
{
    check_scenario(c);
    std::optional<LocationNetwork> network;
    std::optional<EpidemicState> initial;
    if (c.synthetic) {
        network = generate_synthetic(c.synthetic_size, *c.synthetic, c.synthetic_seed);
    }
    else {
        auto loaded = load_network(NetworkFiles{*c.network, *c.population, c.cases}, c.model);
        network     = std::move(loaded.network);
        initial     = std::move(loaded.initial);
    }
    require_valid(*network);
    if (!initial) {
        initial = synthetic_cases(*network, c.model, c.infected_fraction, c.synthetic_seed);
    }

    const double lambda = c.r0 ? infection_rate_from_r0(*c.r0, *c.mu, *network) : *c.lambda;
    Scenario s{.network       = std::move(*network),
               .params        = EpidemicParams{c.model, lambda, *c.mu},
               .gamma         = c.gamma,
               .total_steps   = c.steps,
               .solver        = c.solver,
               .solver_config = c.solver_config,
               .builder       = c.builder,
               .base_seed     = c.seed,
               .force         = c.force};
    return {std::move(s), std::move(*initial)};
}

} // namespace epiqubo
