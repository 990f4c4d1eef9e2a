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
#include "epiqubo/qubo/builders.hpp"

#include <algorithm>

namespace epiqubo
{

namespace
{

/// Depth-first enumeration, 0-branch first, so leaves arrive in
/// lexicographic order and a strict comparison keeps the smallest z among
/// ties. field[j] holds P_j + sum_{i<d, z_i=1} Q_ij for j >= d, accumulated
/// in the same order evaluate() uses.
class Enumerator
{
public:
    explicit Enumerator(const QuboProblem& q)
        : m_q(q)
        , m_z(q.size())
        , m_field(q.linear().begin(), q.linear().end())
        , m_saved(q.size(), std::vector<double>(q.size()))
    {
    }

    detail::RunOutcome run()
    {
        descend(0, m_q.offset());
        return std::move(m_best).finish(m_leaves);
    }

private:
    void descend(std::size_t depth, double value)
    {
        if (depth == m_q.size()) {
            ++m_leaves;
            m_best.offer(m_z, value, m_leaves);
            return;
        }
        descend(depth + 1, value);

        const auto row = m_q.quadratic_row(depth);
        auto& saved    = m_saved[depth];
        const auto neighbors = m_q.neighbors(depth);
        auto later = std::upper_bound(neighbors.begin(), neighbors.end(), depth);
        for (auto it = later; it != neighbors.end(); ++it) {
            saved[*it] = m_field[*it];
            m_field[*it] += row[*it];
        }
        m_z.set(depth, true);
        descend(depth + 1, value + m_field[depth]);
        m_z.set(depth, false);
        for (auto it = later; it != neighbors.end(); ++it) {
            m_field[*it] = saved[*it];
        }
    }

    const QuboProblem& m_q;
    BitVector m_z;
    std::vector<double> m_field;
    std::vector<std::vector<double>> m_saved;
    detail::BestTracker m_best;
    std::uint64_t m_leaves = 0;
};

} // namespace

SolveResult solve_exhaustive(const QuboProblem& q)
{
    if (q.size() > max_enumeration_size) {
        throw ValidationError("exhaustive search limited to " + std::to_string(max_enumeration_size) +
                              " variables, got " + std::to_string(q.size()));
    }
    const auto start = std::chrono::steady_clock::now();
    auto outcome     = Enumerator(q).run();

    SolveResult result;
    result.objective   = evaluate(q, outcome.z);
    result.z_best      = std::move(outcome.z);
    result.evaluations = outcome.evaluations;
    result.trace       = std::move(outcome.trace);
    result.wall_time   = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace epiqubo
