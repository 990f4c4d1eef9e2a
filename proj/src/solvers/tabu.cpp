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
#include <limits>

namespace epiqubo
{

namespace
{

detail::RunOutcome tabu_search(const QuboProblem& q, const SolverConfig& config, Rng& rng, std::uint64_t budget)
{
    const auto m          = q.size();
    // An unset tenure is drawn per move from [base, base + 9].
    const auto base       = config.tabu.tenure.value_or((m + 9) / 10 + 1);
    const bool jitter     = !config.tabu.tenure;
    const auto stagnation = config.tabu.stagnation.value_or(50 * std::max<std::size_t>(m, 1));

    detail::LocalField state(q, detail::random_bits(m, rng));
    double current = evaluate(q, state.state());
    std::uint64_t evaluations = 1;

    detail::BestTracker best;
    best.offer(state.state(), current, evaluations);

    // Move i is tabu while iteration < tabu_until[i].
    std::vector<std::uint64_t> tabu_until(m, 0);
    std::uint64_t iteration = 0;
    std::size_t stagnant    = 0;

    while (m > 0 && stagnant < stagnation && evaluations + m <= budget) {
        std::size_t chosen = m;
        double chosen_delta = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double delta = state.delta(i);
            const bool admissible = iteration >= tabu_until[i] || current + delta < best.value();
            if (admissible && delta < chosen_delta) {
                chosen       = i;
                chosen_delta = delta;
            }
        }
        evaluations += m;
        ++iteration;
        if (chosen == m) {
            ++stagnant;
            continue;
        }

        state.flip(chosen);
        current += chosen_delta;
        tabu_until[chosen] = iteration + base + (jitter ? rng.below(10) : 0);

        const double before = best.value();
        best.offer(state.state(), current, evaluations);
        stagnant = best.value() < before ? 0 : stagnant + 1;
    }
    return std::move(best).finish(evaluations);
}

} // namespace

SolveResult solve_tabu(const QuboProblem& q, const SolverConfig& config)
{
    return detail::run_restarts(q, config, tabu_search);
}

} // namespace epiqubo
