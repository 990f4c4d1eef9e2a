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
#include "epiqubo/controller/controller.hpp"
#include "epiqubo/core/errors.hpp"

#include <sstream>

namespace epiqubo
{

void validate_scenario(const Scenario& scenario)
{
    require_valid(scenario.network);
    validate_params(scenario.params);
    validate(scenario.solver_config);
    if (!(scenario.gamma >= 0.0)) {
        throw ValidationError("gamma must be >= 0");
    }
    if (scenario.total_steps < 1) {
        throw ValidationError("total steps must be >= 1");
    }
    if (scenario.solver == SolverKind::exhaustive && scenario.network.size() > max_enumeration_size) {
        throw ValidationError("exhaustive solver limited to " + std::to_string(max_enumeration_size) +
                              " locations");
    }
    const double bound = invariance_bound(scenario.network);
    if (!scenario.force && scenario.params.lambda > bound) {
        std::ostringstream os;
        os.precision(17);
        os << "infection rate " << scenario.params.lambda << " exceeds the invariance bound " << bound
           << "; states could leave [0, n_i] (use force to run with clamping)";
        throw ValidationError(os.str());
    }
}

ControlLog run_rolling_horizon(const Scenario& scenario, const EpidemicState& initial)
{
    validate_scenario(scenario);
    const SimulationOptions options{scenario.force};
    // Validates the initial state and, if forced, clamps nothing at t = 0.
    ControlLog log;
    log.trajectory = simulate(scenario.network, scenario.params, initial, std::span<const ControlVector>{}, options);

    for (std::size_t t = 0; t < scenario.total_steps; ++t) {
        const auto& current = log.trajectory.states.back();
        SolveResult solved;
        try {
            const auto window = build_qubo(scenario.builder, scenario.network, scenario.params, current,
                                           scenario.gamma);
            auto config = scenario.solver_config;
            config.seed = scenario.base_seed + t;
            solved      = solve(window, scenario.solver, config);
        }
        catch (const std::exception& e) {
            throw StepFailure(t, e.what());
        }

        auto u     = to_control(solved.z_best);
        Trajectory one = simulate(scenario.network, scenario.params, current, u, 1, options);
        auto next  = std::move(one.states.back());
        for (auto clamp : one.clamps) {
            clamp.step = t + 1;
            log.trajectory.clamps.push_back(clamp);
        }

        log.objectives.push_back(solved.objective);
        log.solve_seconds.push_back(solved.wall_time.count());
        log.evaluations.push_back(solved.evaluations);
        log.controls.push_back(u);
        log.trajectory.controls.push_back(std::move(u));
        log.trajectory.states.push_back(std::move(next));
    }
    return log;
}

Trajectory run_uncontrolled_baseline(const Scenario& scenario, const EpidemicState& initial)
{
    validate_scenario(scenario);
    return simulate(scenario.network, scenario.params, initial, ControlVector(scenario.network.size()),
                    scenario.total_steps, SimulationOptions{scenario.force});
}

} // namespace epiqubo
