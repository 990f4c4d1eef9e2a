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
#include "epiqubo/core/epidemic.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace epiqubo
{

namespace
{

void check_dimensions(const EpidemicState& state, const LocationNetwork& net, const ControlVector& u)
{
    if (state.infected.size() != net.size()) {
        throw DimensionError("infected vector", net.size(), state.infected.size());
    }
    if (state.removed && state.removed->size() != net.size()) {
        throw DimensionError("removed vector", net.size(), state.removed->size());
    }
    if (u.size() != net.size()) {
        throw DimensionError("control vector", net.size(), u.size());
    }
}

void check_kind(const EpidemicParams& params, ModelKind expected, const EpidemicState& state)
{
    if (params.kind != expected) {
        throw ValidationError(std::string("model kind mismatch: step for ") + std::string(to_string(expected)) +
                              " called with " + std::string(to_string(params.kind)) + " parameters");
    }
    if ((expected == ModelKind::SIR) != state.removed.has_value()) {
        throw ValidationError(expected == ModelKind::SIR ? "SIR state requires a removed vector"
                                                         : "SIS state must not carry a removed vector");
    }
}

// Relative slack a step's rounding may leave past the domain boundary.
constexpr double rounding_slack = 1e-12;

void snap_rounding(EpidemicState& state, const LocationNetwork& net)
{
    auto snap = [](double& value, double hi, double slack) {
        if (value < 0.0 && value >= -slack) {
            value = 0.0;
        }
        else if (value > hi && value <= hi + slack) {
            value = hi;
        }
    };
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double n     = net.population(i);
        const double slack = rounding_slack * n;
        if (state.removed) {
            snap((*state.removed)[i], n, slack);
            snap(state.infected[i], n - (*state.removed)[i], slack);
        }
        else {
            snap(state.infected[i], n, slack);
        }
    }
}

void clamp_into_domain(EpidemicState& state, const LocationNetwork& net, std::size_t step,
                       std::vector<ClampEvent>& log)
{
    auto clamp = [&](double& value, double hi, std::size_t i, const char* compartment) {
        const double clamped = std::clamp(value, 0.0, hi);
        if (clamped != value) {
            log.push_back({step, i, compartment, value, clamped});
            value = clamped;
        }
    };
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double n = net.population(i);
        if (state.removed) {
            clamp((*state.removed)[i], n, i, "removed");
            clamp(state.infected[i], n - (*state.removed)[i], i, "infected");
        }
        else {
            clamp(state.infected[i], n, i, "infected");
        }
    }
}

} // namespace

std::string_view to_string(ModelKind kind)
{
    return kind == ModelKind::SIS ? "sis" : "sir";
}

ModelKind parse_model_kind(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (lower == "sis") {
        return ModelKind::SIS;
    }
    if (lower == "sir") {
        return ModelKind::SIR;
    }
    throw ValidationError("unknown model kind '" + std::string(text) + "' (expected sis or sir)");
}

void validate_params(const EpidemicParams& params)
{
    if (!std::isfinite(params.lambda) || params.lambda < 0.0) {
        throw ValidationError("infection rate must be finite and >= 0");
    }
    if (!std::isfinite(params.mu) || params.mu < 0.0 || params.mu > 1.0) {
        throw ValidationError("recovery rate must lie in [0, 1]");
    }
}

EpidemicState EpidemicState::zero(std::size_t size, ModelKind kind)
{
    EpidemicState s;
    s.infected.assign(size, 0.0);
    if (kind == ModelKind::SIR) {
        s.removed = std::vector<double>(size, 0.0);
    }
    return s;
}

double EpidemicState::total_infected() const
{
    return std::accumulate(infected.begin(), infected.end(), 0.0);
}

ValidationReport validate_state(const LocationNetwork& net, ModelKind kind, const EpidemicState& state)
{
    ValidationReport report;
    if (state.infected.size() != net.size()) {
        report.violations.push_back("infected vector has " + std::to_string(state.infected.size()) +
                                    " entries for " + std::to_string(net.size()) + " locations");
        return report;
    }
    if (kind == ModelKind::SIR && !state.removed) {
        report.violations.push_back("SIR state requires a removed vector");
        return report;
    }
    if (kind == ModelKind::SIS && state.removed) {
        report.violations.push_back("SIS state must not carry a removed vector");
        return report;
    }
    if (state.removed && state.removed->size() != net.size()) {
        report.violations.push_back("removed vector has " + std::to_string(state.removed->size()) +
                                    " entries for " + std::to_string(net.size()) + " locations");
        return report;
    }
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double x = state.infected[i];
        const double y = state.removed ? (*state.removed)[i] : 0.0;
        const double n = net.population(i);
        if (!std::isfinite(x) || x < 0.0) {
            report.violations.push_back("negative or non-finite infected at " + std::to_string(i));
        }
        if (!std::isfinite(y) || y < 0.0) {
            report.violations.push_back("negative or non-finite removed at " + std::to_string(i));
        }
        // Rounding in a step can push a valid state an ulp past n_i.
        if (x + y > n * (1.0 + rounding_slack)) {
            report.violations.push_back("cases exceed population at location " + std::to_string(i));
        }
    }
    return report;
}

std::vector<double> Trajectory::total_infected() const
{
    std::vector<double> totals;
    totals.reserve(states.size());
    for (const auto& s : states) {
        totals.push_back(s.total_infected());
    }
    return totals;
}

std::vector<double> infection_force(const EpidemicState& state, const LocationNetwork& net,
                                    const ControlVector& u)
{
    check_dimensions(state, net, u);
    const auto m = net.size();
    std::vector<double> alpha(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (u[i]) {
            alpha[i] = state.infected[i];
            continue;
        }
        const auto row = net.weights().row(i);
        double inflow  = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            inflow += row[j] * state.infected[j];
        }
        alpha[i] = state.infected[i] + inflow;
    }
    return alpha;
}

std::vector<double> infection_force(const EpidemicState& state, const LocationNetwork& net)
{
    return infection_force(state, net, ControlVector(net.size()));
}

EpidemicState step_sis(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                       const ControlVector& u)
{
    check_kind(params, ModelKind::SIS, state);
    const auto alpha = infection_force(state, net, u);
    EpidemicState next;
    next.infected.resize(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double n = net.population(i);
        const double x = state.infected[i];
        next.infected[i] = (1.0 - params.mu) * x + params.lambda / n * (n - x) * alpha[i];
    }
    return next;
}

EpidemicState step_sir(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                       const ControlVector& u)
{
    check_kind(params, ModelKind::SIR, state);
    const auto alpha = infection_force(state, net, u);
    const auto& removed = *state.removed;
    EpidemicState next;
    next.infected.resize(net.size());
    next.removed = std::vector<double>(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double n = net.population(i);
        const double x = state.infected[i];
        const double y = removed[i];
        next.infected[i]     = (1.0 - params.mu) * x + params.lambda / n * (n - x - y) * alpha[i];
        (*next.removed)[i]   = y + params.mu * x;
    }
    return next;
}

EpidemicState step(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                   const ControlVector& u)
{
    return params.kind == ModelKind::SIS ? step_sis(state, net, params, u) : step_sir(state, net, params, u);
}

Trajectory simulate(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                    std::span<const ControlVector> schedule, SimulationOptions options)
{
    const auto report = validate_state(net, params.kind, initial);
    if (!report.ok()) {
        throw ValidationError("invalid initial state: " + report.summary());
    }
    Trajectory traj;
    traj.states.reserve(schedule.size() + 1);
    traj.states.push_back(initial);
    traj.controls.assign(schedule.begin(), schedule.end());
    for (std::size_t t = 0; t < schedule.size(); ++t) {
        auto next = step(traj.states.back(), net, params, schedule[t]);
        snap_rounding(next, net);
        if (options.clamp_to_domain) {
            clamp_into_domain(next, net, t + 1, traj.clamps);
        }
        traj.states.push_back(std::move(next));
    }
    return traj;
}

Trajectory simulate(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                    const ControlVector& constant, std::size_t steps, SimulationOptions options)
{
    const std::vector<ControlVector> schedule(steps, constant);
    return simulate(net, params, initial, schedule, options);
}

double horizon_infections(const Trajectory& traj, std::size_t horizon)
{
    if (traj.states.size() < horizon + 1) {
        throw ValidationError("trajectory has " + std::to_string(traj.states.size()) +
                              " states, a horizon of " + std::to_string(horizon) + " needs " +
                              std::to_string(horizon + 1));
    }
    double total = 0.0;
    for (std::size_t t = 1; t <= horizon; ++t) {
        total += traj.states[t].total_infected();
    }
    return total;
}

double control_cost(const ControlVector& u, double gamma, const LocationNetwork& net)
{
    if (u.size() != net.size()) {
        throw DimensionError("control vector", net.size(), u.size());
    }
    double isolated = 0.0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        if (u[i]) {
            isolated += net.population(i);
        }
    }
    return gamma * isolated;
}

double cost(const Trajectory& traj, const ControlVector& u, double gamma, const LocationNetwork& net,
            std::size_t horizon)
{
    return horizon_infections(traj, horizon) + control_cost(u, gamma, net);
}

double cost(const Trajectory& traj, const ControlVector& u, double gamma, const LocationNetwork& net)
{
    if (traj.states.empty()) {
        throw ValidationError("cannot cost an empty trajectory");
    }
    return cost(traj, u, gamma, net, traj.states.size() - 1);
}

double two_step_cost(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                     const ControlVector& u, double gamma)
{
    return cost(simulate(net, params, initial, u, 2), u, gamma, net, 2);
}

} // namespace epiqubo
