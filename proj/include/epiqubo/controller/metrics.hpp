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

#include <optional>
#include <vector>

namespace epiqubo
{

struct LocationMetrics {
    double peak_baseline;
    double peak_controlled;
    double average_baseline;
    double average_controlled;
};

struct TimingStats {
    std::size_t solves   = 0;
    double total_seconds = 0.0;
    double mean_seconds  = 0.0;
    double max_seconds   = 0.0;
};

/// Peaks are taken over t = 0..T, averages over t = 1..T, of total infected.
/// Reductions are percentages relative to the baseline and are empty when
/// the baseline quantity is zero.
struct MetricsReport {
    double peak_baseline      = 0.0;
    double peak_controlled    = 0.0;
    double average_baseline   = 0.0;
    double average_controlled = 0.0;
    std::optional<double> peak_reduction;
    std::optional<double> average_reduction;
    std::vector<LocationMetrics> locations;
    TimingStats timing;
};

/// Throws ValidationError when the trajectories differ in length or width.
MetricsReport compute_metrics(const Trajectory& controlled, const Trajectory& baseline);

MetricsReport compute_metrics(const ControlLog& controlled, const Trajectory& baseline);

/// 100 (baseline - controlled) / baseline, or empty for a zero baseline.
std::optional<double> reduction_percent(double baseline, double controlled);

} // namespace epiqubo
