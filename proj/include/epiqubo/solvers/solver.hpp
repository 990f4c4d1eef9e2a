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

#include "epiqubo/qubo/qubo_problem.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace epiqubo
{

enum class SolverKind
{
    exhaustive,
    simulated_annealing,
    tabu,
    genetic,
};

/// "exhaustive", "sa", "tabu", "ga".
std::string_view to_string(SolverKind kind);
SolverKind parse_solver_kind(std::string_view text);

/// Unset optional knobs are sized from the instance when the solver starts.
struct AnnealingConfig {
    /// Default: max |single-flip delta| over 100 random probe states.
    std::optional<double> initial_temperature;
    double final_ratio           = 1e-3; ///< final / initial temperature
    double cooling               = 0.97; ///< geometric ratio per level
    std::size_t sweeps           = 10;   ///< M flips per sweep

    friend bool operator==(const AnnealingConfig&, const AnnealingConfig&) = default;
};

struct TabuConfig {
    /// Default ceil(M/10) + 1 plus a fresh random 0..9 on every move.
    std::optional<std::size_t> tenure;
    std::optional<std::size_t> stagnation; ///< default 50 M iterations

    friend bool operator==(const TabuConfig&, const TabuConfig&) = default;
};

struct GeneticConfig {
    std::optional<std::size_t> population; ///< default 4 M
    double crossover        = 0.9;
    std::optional<double> mutation;        ///< per bit, default 1/M
    std::size_t generations = 200;
    std::size_t tournament  = 2;

    friend bool operator==(const GeneticConfig&, const GeneticConfig&) = default;
};

struct SolverConfig {
    std::uint64_t seed    = 0;
    /// Objective evaluations allowed across all restarts. A single-flip
    /// delta counts as one evaluation, as does a full evaluation.
    std::uint64_t budget  = 100'000'000;
    std::size_t restarts  = 1;
    /// Restarts run on up to this many threads; results do not depend on it.
    std::size_t threads   = 1;
    AnnealingConfig annealing;
    TabuConfig tabu;
    GeneticConfig genetic;

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Throws ValidationError for non-positive knobs, probabilities outside
/// [0, 1] or ratios outside (0, 1).
void validate(const SolverConfig& config);

struct TracePoint {
    std::uint64_t evaluation; ///< 1-based evaluation index
    double best;              ///< best objective seen so far

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SolveResult {
    BitVector z_best;
    double objective = 0.0; ///< evaluate(q, z_best), offset included
    std::uint64_t evaluations = 0;
    std::chrono::duration<double> wall_time{0.0};
    std::vector<TracePoint> trace; ///< nonincreasing best-so-far
};

/// Global minimum by enumeration; ties go to the lexicographically smallest
/// z. Accumulates the objective in the same order as evaluate(), so the
/// reported minimum is the true floating-point minimum of evaluate().
SolveResult solve_exhaustive(const QuboProblem& q);

/// Single-flip Metropolis annealing with a geometric schedule, in-order sweeps.
SolveResult solve_simulated_annealing(const QuboProblem& q, const SolverConfig& config);

/// Steepest single-flip descent with a recency tabu list and aspiration;
/// a run ends on budget or after `stagnation` non-improving iterations.
SolveResult solve_tabu(const QuboProblem& q, const SolverConfig& config);

/// Generational GA: tournament selection, uniform crossover, per-bit
/// mutation, elitism of one.
SolveResult solve_genetic(const QuboProblem& q, const SolverConfig& config);

SolveResult solve(const QuboProblem& q, SolverKind kind, const SolverConfig& config);

} // namespace epiqubo
