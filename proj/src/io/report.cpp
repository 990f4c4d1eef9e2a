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
#include "epiqubo/io/report.hpp"
#include "epiqubo/core/network.hpp"
#include "epiqubo/qubo/qubo_format.hpp"

#include <json.hpp>

namespace epiqubo
{

namespace
{

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& value)
{
    return value ? Json(*value) : Json(nullptr);
}

Json metrics_object(const MetricsReport& m)
{
    Json out;
    out["peak_uncontrolled"]    = m.peak_baseline;
    out["peak_controlled"]      = m.peak_controlled;
    out["average_uncontrolled"] = m.average_baseline;
    out["average_controlled"]   = m.average_controlled;
    out["p"]                    = optional_number(m.peak_reduction);
    out["a"]                    = optional_number(m.average_reduction);
    Json locations = Json::array();
    for (std::size_t i = 0; i < m.locations.size(); ++i) {
        const auto& l = m.locations[i];
        locations.push_back({{"location", i},
                             {"peak_uncontrolled", l.peak_baseline},
                             {"peak_controlled", l.peak_controlled},
                             {"average_uncontrolled", l.average_baseline},
                             {"average_controlled", l.average_controlled}});
    }
    out["locations"] = std::move(locations);
    return out;
}

Json timing_object(const TimingStats& t)
{
    return {{"solves", t.solves},
            {"total_seconds", t.total_seconds},
            {"mean_seconds", t.mean_seconds},
            {"max_seconds", t.max_seconds}};
}

Json isolated_indices(const ControlVector& u)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i]) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

RunResult run_scenario(const ScenarioConfig& config)
{
    RunResult run{config, resolve_scenario(config), {}, {}, {}};
    run.log      = run_rolling_horizon(run.resolved.scenario, run.resolved.initial);
    run.baseline = run_uncontrolled_baseline(run.resolved.scenario, run.resolved.initial);
    run.metrics  = compute_metrics(run.log, run.baseline);
    return run;
}

std::string run_report_json(const RunResult& run)
{
    const auto& s   = run.resolved.scenario;
    const auto& log = run.log;

    Json doc;
    Json echo;
    for (const auto& [key, value] : scenario_entries(run.config)) {
        echo[key] = value;
    }
    doc["scenario"] = std::move(echo);
    doc["resolved"] = {{"locations", s.network.size()},
                       {"model", std::string(to_string(s.params.kind))},
                       {"lambda", s.params.lambda},
                       {"mu", s.params.mu},
                       {"invariance_bound", invariance_bound(s.network)},
                       {"total_population", s.network.total_population()}};
    doc["metrics"] = metrics_object(run.metrics);

    Json steps = Json::array();
    for (std::size_t t = 0; t < log.controls.size(); ++t) {
        steps.push_back({{"t", t},
                         {"control", log.controls[t].to_string()},
                         {"isolated", isolated_indices(log.controls[t])},
                         {"objective", log.objectives[t]},
                         {"evaluations", log.evaluations[t]}});
    }
    doc["steps"] = std::move(steps);

    Json infected = Json::array();
    Json baseline = Json::array();
    for (const auto& state : log.trajectory.states) {
        infected.push_back(state.infected);
    }
    for (const auto& state : run.baseline.states) {
        baseline.push_back(state.infected);
    }
    doc["infected"]          = std::move(infected);
    doc["baseline_infected"] = std::move(baseline);

    Json clamps = Json::array();
    for (const auto& c : log.trajectory.clamps) {
        clamps.push_back({{"step", c.step},
                          {"location", c.location},
                          {"compartment", c.compartment},
                          {"raw", c.raw_value},
                          {"clamped", c.clamped_value}});
    }
    doc["clamps"] = std::move(clamps);

    Json timing = timing_object(run.metrics.timing);
    timing["per_step_seconds"] = log.solve_seconds;
    doc["timing"] = std::move(timing);
    return doc.dump(2) + "\n";
}

std::string run_report_csv(const RunResult& run)
{
    const auto& states = run.log.trajectory.states;
    const auto m       = run.resolved.scenario.network.size();
    std::string out = "t,baseline_total,controlled_total,isolated";
    for (std::size_t i = 0; i < m; ++i) {
        out += ",x_" + std::to_string(i);
    }
    out += "\n";
    for (std::size_t t = 0; t < states.size(); ++t) {
        out += std::to_string(t) + "," + format_decimal(run.baseline.states[t].total_infected()) + "," +
               format_decimal(states[t].total_infected()) + ",";
        if (t < run.log.controls.size()) {
            out += std::to_string(run.log.controls[t].count());
        }
        for (double x : states[t].infected) {
            out += "," + format_decimal(x);
        }
        out += "\n";
    }
    return out;
}

std::string metrics_json(const MetricsReport& metrics)
{
    Json doc = metrics_object(metrics);
    doc["timing"] = timing_object(metrics.timing);
    return doc.dump(2) + "\n";
}

std::string solve_result_json(const SolveResult& result)
{
    Json trace = Json::array();
    for (const auto& point : result.trace) {
        trace.push_back({{"evaluation", point.evaluation}, {"best", point.best}});
    }
    Json doc;
    doc["z"]           = result.z_best.to_string();
    doc["u"]           = to_control(result.z_best).to_string();
    doc["objective"]   = result.objective;
    doc["evaluations"] = result.evaluations;
    doc["trace"]       = std::move(trace);
    doc["timing"]      = {{"wall_seconds", result.wall_time.count()}};
    return doc.dump(2) + "\n";
}

} // namespace epiqubo
