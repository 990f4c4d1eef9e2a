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

#include "epiqubo/controller/metrics.hpp"
#include "epiqubo/io/scenario.hpp"

#include <string>

namespace epiqubo
{

/// Everything one `control` run produces.
struct RunResult {
    ScenarioConfig config;
    ResolvedScenario resolved;
    ControlLog log;
    Trajectory baseline;
    MetricsReport metrics;
};

/// Resolves the scenario, runs the controller and the baseline and scores them.
RunResult run_scenario(const ScenarioConfig& config);

/// JSON document with sections scenario (re-runnable echo), resolved,
/// metrics, steps, infected, clamps and timing. Every wall-clock figure
/// lives under "timing"; the rest is a pure function of the scenario.
std::string run_report_json(const RunResult& run);

/// Plot-ready per-step CSV:
/// t,baseline_total,controlled_total,isolated,x_0..x_{M-1}
/// where isolated counts the locations banned at step t (empty at t = T).
std::string run_report_csv(const RunResult& run);

std::string metrics_json(const MetricsReport& metrics);

std::string solve_result_json(const SolveResult& result);

} // namespace epiqubo
