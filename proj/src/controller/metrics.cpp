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
#include "epiqubo/controller/metrics.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <numeric>

namespace epiqubo
{

namespace
{

double peak(const std::vector<double>& series)
{
    return *std::max_element(series.begin(), series.end());
}

double average(const std::vector<double>& series)
{
    if (series.size() < 2) {
        return 0.0;
    }
    const double sum = std::accumulate(series.begin() + 1, series.end(), 0.0);
    return sum / static_cast<double>(series.size() - 1);
}

std::vector<double> location_series(const Trajectory& traj, std::size_t i)
{
    std::vector<double> series;
    series.reserve(traj.states.size());
    for (const auto& state : traj.states) {
        series.push_back(state.infected[i]);
    }
    return series;
}

} // namespace

std::optional<double> reduction_percent(double baseline, double controlled)
{
    if (baseline == 0.0) {
        return std::nullopt;
    }
    return 100.0 * (baseline - controlled) / baseline;
}

MetricsReport compute_metrics(const Trajectory& controlled, const Trajectory& baseline)
{
    if (controlled.states.empty() || baseline.states.empty()) {
        throw ValidationError("metrics need non-empty trajectories");
    }
    if (controlled.states.size() != baseline.states.size()) {
        throw DimensionError("trajectory length", baseline.states.size(), controlled.states.size());
    }
    const auto width = baseline.states.front().infected.size();
    for (const auto* traj : {&controlled, &baseline}) {
        for (const auto& state : traj->states) {
            if (state.infected.size() != width) {
                throw DimensionError("state width", width, state.infected.size());
            }
        }
    }

    MetricsReport report;
    const auto base_totals = baseline.total_infected();
    const auto ctrl_totals = controlled.total_infected();
    report.peak_baseline      = peak(base_totals);
    report.peak_controlled    = peak(ctrl_totals);
    report.average_baseline   = average(base_totals);
    report.average_controlled = average(ctrl_totals);
    report.peak_reduction     = reduction_percent(report.peak_baseline, report.peak_controlled);
    report.average_reduction  = reduction_percent(report.average_baseline, report.average_controlled);

    for (std::size_t i = 0; i < width; ++i) {
        const auto b = location_series(baseline, i);
        const auto c = location_series(controlled, i);
        report.locations.push_back({peak(b), peak(c), average(b), average(c)});
    }
    return report;
}

MetricsReport compute_metrics(const ControlLog& controlled, const Trajectory& baseline)
{
    auto report = compute_metrics(controlled.trajectory, baseline);
    const auto& times = controlled.solve_seconds;
    report.timing.solves = times.size();
    if (!times.empty()) {
        report.timing.total_seconds = std::accumulate(times.begin(), times.end(), 0.0);
        report.timing.mean_seconds  = report.timing.total_seconds / static_cast<double>(times.size());
        report.timing.max_seconds   = *std::max_element(times.begin(), times.end());
    }
    return report;
}

} // namespace epiqubo
