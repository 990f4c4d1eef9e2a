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

#include "epiqubo/core/binary_vector.hpp"
#include "epiqubo/core/network.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epiqubo
{

enum class ModelKind
{
    SIS,
    SIR,
};

std::string_view to_string(ModelKind kind);

/// Parses "sis" / "sir" (case-insensitive).
ModelKind parse_model_kind(std::string_view text);

/// Per-step rates. All rates are per time step; the step's wall-clock
/// duration is scenario metadata and never enters the dynamics.
struct EpidemicParams {
    ModelKind kind = ModelKind::SIS;
    double lambda  = 0.0; ///< infection rate
    double mu      = 0.0; ///< recovery rate, in [0, 1]
};

/// Throws ValidationError unless lambda >= 0 and 0 <= mu <= 1.
void validate_params(const EpidemicParams& params);

/// Infected counts per location, plus removed counts for SIR. Counts are
/// real-valued (continuum approximation of large populations).
struct EpidemicState {
    std::vector<double> infected;
    std::optional<std::vector<double>> removed;

    static EpidemicState zero(std::size_t size, ModelKind kind);

    double total_infected() const;

    friend bool operator==(const EpidemicState&, const EpidemicState&) = default;
};

/// Checks dimensions, the compartment layout for `kind` and that the state
/// lies in the box D (0 <= x_i, x_i + y_i <= n_i).
ValidationReport validate_state(const LocationNetwork& net, ModelKind kind, const EpidemicState& state);

/// A state clamped back into D, recorded when running with clamping enabled.
struct ClampEvent {
    std::size_t step;     ///< index of the state that was clamped
    std::size_t location;
    std::string compartment; ///< "infected" or "removed"
    double raw_value;
    double clamped_value;
};

struct Trajectory {
    std::vector<EpidemicState> states;   ///< t = 0..T
    std::vector<ControlVector> controls; ///< control applied at t = 0..T-1
    std::vector<ClampEvent> clamps;

    std::size_t steps() const
    {
        return controls.size();
    }

    /// Sum over locations of x_i(t), for every recorded t.
    std::vector<double> total_infected() const;
};

/// alpha_i = x_i + (1 - u_i) sum_j A_ij x_j. Isolating i removes only the
/// inflow term of location i; its infected still count in other rows.
std::vector<double> infection_force(const EpidemicState& state, const LocationNetwork& net,
                                    const ControlVector& u);

/// Uncontrolled force alpha_i = x_i + sum_j A_ij x_j.
std::vector<double> infection_force(const EpidemicState& state, const LocationNetwork& net);

EpidemicState step_sis(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                       const ControlVector& u);

EpidemicState step_sir(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                       const ControlVector& u);

/// Dispatches on params.kind.
EpidemicState step(const EpidemicState& state, const LocationNetwork& net, const EpidemicParams& params,
                   const ControlVector& u);

struct SimulationOptions {
    /// Clamp every new state into D and log the clamps. Only meaningful for
    /// runs deliberately configured above the invariance bound.
    bool clamp_to_domain = false;
};

/// Applies `schedule[t]` at step t for t = 0..schedule.size()-1. A component
/// that rounding leaves within 1e-12 n_i outside D is put back on its bound.
Trajectory simulate(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                    std::span<const ControlVector> schedule, SimulationOptions options = {});

/// Applies the same control at every one of `steps` steps.
Trajectory simulate(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                    const ControlVector& constant, std::size_t steps, SimulationOptions options = {});

/// sum_i sum_{t=1..horizon} x_i(t); the initial state is excluded.
double horizon_infections(const Trajectory& traj, std::size_t horizon);

/// Cost of a window: sum_i sum_{t=1..horizon} x_i(t) + gamma sum_i n_i u_i.
/// Throws ValidationError when the trajectory has fewer than horizon+1 states.
double cost(const Trajectory& traj, const ControlVector& u, double gamma, const LocationNetwork& net,
            std::size_t horizon);

/// Same, over the whole trajectory.
double cost(const Trajectory& traj, const ControlVector& u, double gamma, const LocationNetwork& net);

/// gamma * sum_i n_i u_i.
double control_cost(const ControlVector& u, double gamma, const LocationNetwork& net);

/// Simulates two steps under constant `u` and returns the window cost.
double two_step_cost(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                     const ControlVector& u, double gamma);

} // namespace epiqubo
