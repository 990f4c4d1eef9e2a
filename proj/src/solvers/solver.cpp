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
#include "detail.hpp"

#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <string>

namespace epiqubo
{

std::string_view to_string(SolverKind kind)
{
    switch (kind) {
    case SolverKind::exhaustive:
        return "exhaustive";
    case SolverKind::simulated_annealing:
        return "sa";
    case SolverKind::tabu:
        return "tabu";
    case SolverKind::genetic:
        return "ga";
    }
    return "unknown";
}

SolverKind parse_solver_kind(std::string_view raw)
{
    std::string text(raw);
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    if (text == "exhaustive") {
        return SolverKind::exhaustive;
    }
    if (text == "sa") {
        return SolverKind::simulated_annealing;
    }
    if (text == "tabu") {
        return SolverKind::tabu;
    }
    if (text == "ga") {
        return SolverKind::genetic;
    }
    throw ValidationError("unknown solver '" + std::string(raw) + "' (expected exhaustive, sa, tabu or ga)");
}

void validate(const SolverConfig& config)
{
    auto require = [](bool ok, const std::string& what) {
        if (!ok) {
            throw ValidationError("invalid solver configuration: " + what);
        }
    };
    require(config.budget >= 1, "budget must be >= 1");
    require(config.restarts >= 1, "restarts must be >= 1");
    require(config.threads >= 1, "threads must be >= 1");

    const auto& sa = config.annealing;
    require(!sa.initial_temperature || (std::isfinite(*sa.initial_temperature) && *sa.initial_temperature > 0.0),
            "initial temperature must be > 0");
    require(sa.final_ratio > 0.0 && sa.final_ratio < 1.0, "final temperature ratio must lie in (0, 1)");
    require(sa.cooling > 0.0 && sa.cooling < 1.0, "cooling ratio must lie in (0, 1)");
    require(sa.sweeps >= 1, "sweeps per temperature must be >= 1");

    require(!config.tabu.tenure || *config.tabu.tenure >= 1, "tabu tenure must be >= 1");
    require(!config.tabu.stagnation || *config.tabu.stagnation >= 1, "stagnation cap must be >= 1");

    const auto& ga = config.genetic;
    require(!ga.population || *ga.population >= 1, "population must be >= 1");
    require(ga.crossover >= 0.0 && ga.crossover <= 1.0, "crossover probability must lie in [0, 1]");
    require(!ga.mutation || (*ga.mutation >= 0.0 && *ga.mutation <= 1.0), "mutation probability must lie in [0, 1]");
    require(ga.generations >= 1, "generations must be >= 1");
    require(ga.tournament >= 1, "tournament size must be >= 1");
}

SolveResult solve(const QuboProblem& q, SolverKind kind, const SolverConfig& config)
{
    switch (kind) {
    case SolverKind::exhaustive:
        return solve_exhaustive(q);
    case SolverKind::simulated_annealing:
        return solve_simulated_annealing(q, config);
    case SolverKind::tabu:
        return solve_tabu(q, config);
    case SolverKind::genetic:
        return solve_genetic(q, config);
    }
    throw ValidationError("unknown solver kind");
}

namespace detail
{

BitVector random_bits(std::size_t size, Rng& rng)
{
    BitVector z(size);
    for (std::size_t i = 0; i < size; ++i) {
        z.set(i, (rng.next() >> 63) != 0);
    }
    return z;
}

SolveResult run_restarts(const QuboProblem& q, const SolverConfig& config, const SingleRun& run)
{
    validate(config);
    const auto start    = std::chrono::steady_clock::now();
    const auto restarts = static_cast<std::uint64_t>(std::min<std::uint64_t>(config.restarts, config.budget));

    auto launch = [&](std::uint64_t r) {
        const std::uint64_t share = config.budget / restarts + (r < config.budget % restarts ? 1 : 0);
        Rng rng(derive_seed(config.seed, r));
        return run(q, config, rng, share);
    };

    std::vector<RunOutcome> outcomes(restarts);
    if (config.threads <= 1 || restarts == 1) {
        for (std::uint64_t r = 0; r < restarts; ++r) {
            outcomes[r] = launch(r);
        }
    }
    else {
        for (std::uint64_t first = 0; first < restarts; first += config.threads) {
            const auto last = std::min<std::uint64_t>(restarts, first + config.threads);
            std::vector<std::future<RunOutcome>> pending;
            for (auto r = first; r < last; ++r) {
                pending.push_back(std::async(std::launch::async, launch, r));
            }
            for (auto r = first; r < last; ++r) {
                outcomes[r] = pending[r - first].get();
            }
        }
    }

    SolveResult result;
    bool have_best = false;
    std::uint64_t offset = 0;
    for (auto& outcome : outcomes) {
        const double objective = evaluate(q, outcome.z);
        if (!have_best || objective < result.objective ||
            (objective == result.objective && outcome.z < result.z_best)) {
            have_best        = true;
            result.objective = objective;
            result.z_best    = outcome.z;
        }
        for (const auto& point : outcome.trace) {
            if (result.trace.empty() || point.best < result.trace.back().best) {
                result.trace.push_back({offset + point.evaluation, point.best});
            }
        }
        offset += outcome.evaluations;
    }
    result.evaluations = offset;
    result.wall_time   = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace detail

} // namespace epiqubo
