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

#include <algorithm>
#include <cmath>

namespace epiqubo
{

namespace
{

constexpr std::size_t probe_states    = 100;
constexpr std::uint64_t probe_stream  = 0x5eed;

double probe_temperature(const QuboProblem& q, std::uint64_t seed)
{
    Rng probe(derive_seed(seed, probe_stream));
    double widest = 0.0;
    for (std::size_t k = 0; k < probe_states; ++k) {
        const auto z = detail::random_bits(q.size(), probe);
        const auto i = probe.below(q.size());
        widest       = std::max(widest, std::abs(incremental_delta(q, z, i)));
    }
    return widest > 0.0 ? widest : 1.0;
}

detail::RunOutcome anneal(const QuboProblem& q, const SolverConfig& config, Rng& rng, std::uint64_t budget)
{
    const auto& sa = config.annealing;
    detail::LocalField state(q, detail::random_bits(q.size(), rng));
    double current = evaluate(q, state.state());
    std::uint64_t evaluations = 1;

    detail::BestTracker best;
    best.offer(state.state(), current, evaluations);
    if (q.size() == 0) {
        return std::move(best).finish(evaluations);
    }

    const double initial = sa.initial_temperature ? *sa.initial_temperature : probe_temperature(q, rng.next());
    const double final_temperature = initial * sa.final_ratio;

    for (double temperature = initial; temperature >= final_temperature; temperature *= sa.cooling) {
        for (std::size_t sweep = 0; sweep < sa.sweeps; ++sweep) {
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (evaluations >= budget) {
                    return std::move(best).finish(evaluations);
                }
                const double delta = state.delta(i);
                ++evaluations;
                if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
                    state.flip(i);
                    current += delta;
                    best.offer(state.state(), current, evaluations);
                }
            }
        }
    }
    return std::move(best).finish(evaluations);
}

} // namespace

SolveResult solve_simulated_annealing(const QuboProblem& q, const SolverConfig& config)
{
    return detail::run_restarts(q, config, anneal);
}

} // namespace epiqubo
