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
#include "epiqubo/qubo/builders.hpp"
#include "epiqubo/solvers/solver.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epiqubo
{

/// A fully resolved scenario: network loaded, infection rate calibrated.
struct Scenario {
    LocationNetwork network{};
    EpidemicParams params{};
    double gamma            = 0.0;
    std::size_t total_steps = 30;
    SolverKind solver       = SolverKind::simulated_annealing;
    SolverConfig solver_config{};
    BuilderKind builder     = BuilderKind::analytic;
    std::uint64_t base_seed = 0;
    /// Run even when lambda exceeds the invariance bound, clamping states
    /// into the box and logging every clamp.
    bool force = false;
};

/// Throws ValidationError for an invalid network or parameters, gamma < 0,
/// zero steps, an exhaustive solver on too many locations, or (unless
/// `force`) lambda above invariance_bound().
void validate_scenario(const Scenario& scenario);

/// Raised when building or solving the window QUBO fails mid-run.
class StepFailure : public std::runtime_error
{
public:
    StepFailure(std::size_t step, const std::string& what)
        : std::runtime_error("rolling horizon failed at step " + std::to_string(step) + ": " + what)
        , m_step(step)
    {
    }

    std::size_t step() const
    {
        return m_step;
    }

private:
    std::size_t m_step;
};

struct ControlLog {
    std::vector<ControlVector> controls;  ///< applied at t = 0..T-1
    std::vector<double> objectives;       ///< window QUBO value of the chosen control
    std::vector<double> solve_seconds;    ///< solver wall time per step
    std::vector<std::uint64_t> evaluations;
    Trajectory trajectory;                ///< states t = 0..T, clamps if forced
};

/// Receding horizon: at every step compile the two-step window from the
/// current state, solve it with seed base_seed + t, apply u = 1 - z for one
/// step only, and repeat for total_steps steps.
ControlLog run_rolling_horizon(const Scenario& scenario, const EpidemicState& initial);

/// The same number of steps with no location ever isolated.
Trajectory run_uncontrolled_baseline(const Scenario& scenario, const EpidemicState& initial);

} // namespace epiqubo
