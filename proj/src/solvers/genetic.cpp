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

namespace epiqubo
{

namespace
{

struct Individual {
    BitVector genes;
    double fitness;
};

bool fitter(const Individual& a, const Individual& b)
{
    return a.fitness < b.fitness || (a.fitness == b.fitness && a.genes < b.genes);
}

detail::RunOutcome evolve(const QuboProblem& q, const SolverConfig& config, Rng& rng, std::uint64_t budget)
{
    const auto m        = q.size();
    const auto& ga      = config.genetic;
    const auto size     = ga.population.value_or(4 * std::max<std::size_t>(m, 1));
    const double mutate = ga.mutation.value_or(m > 0 ? 1.0 / static_cast<double>(m) : 0.0);

    detail::BestTracker best;
    std::uint64_t evaluations = 0;

    auto assess = [&](BitVector genes) {
        const double fitness = evaluate(q, genes);
        ++evaluations;
        best.offer(genes, fitness, evaluations);
        return Individual{std::move(genes), fitness};
    };

    std::vector<Individual> population;
    population.reserve(size);
    while (population.size() < size && evaluations < budget) {
        population.push_back(assess(detail::random_bits(m, rng)));
    }

    auto tournament = [&]() -> const Individual& {
        const Individual* winner = &population[rng.below(population.size())];
        for (std::size_t k = 1; k < ga.tournament; ++k) {
            const Individual& rival = population[rng.below(population.size())];
            if (fitter(rival, *winner)) {
                winner = &rival;
            }
        }
        return *winner;
    };

    for (std::size_t generation = 0; generation < ga.generations && evaluations < budget; ++generation) {
        std::vector<Individual> next;
        next.reserve(size);
        next.push_back(*std::min_element(population.begin(), population.end(), fitter));

        while (next.size() < size && evaluations < budget) {
            const auto& mother = tournament();
            const auto& father = tournament();
            BitVector child    = mother.genes;
            if (rng.bernoulli(ga.crossover)) {
                for (std::size_t i = 0; i < m; ++i) {
                    if ((rng.next() >> 63) != 0) {
                        child.set(i, father.genes[i]);
                    }
                }
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (mutate > 0.0 && rng.bernoulli(mutate)) {
                    child.flip(i);
                }
            }
            next.push_back(assess(std::move(child)));
        }
        population = std::move(next);
    }
    return std::move(best).finish(evaluations);
}

} // namespace

SolveResult solve_genetic(const QuboProblem& q, const SolverConfig& config)
{
    return detail::run_restarts(q, config, evolve);
}

} // namespace epiqubo
