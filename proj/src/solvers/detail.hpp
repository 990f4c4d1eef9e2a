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

#include "epiqubo/solvers/rng.hpp"
#include "epiqubo/solvers/solver.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace epiqubo::detail
{

/// Outcome of one seeded run; the merged objective is recomputed exactly.
struct RunOutcome {
    BitVector z;
    std::uint64_t evaluations = 0;
    std::vector<TracePoint> trace;
};

/// Best-ever state with lexicographic tie-breaking and an improvement trace.
class BestTracker
{
public:
    void offer(const BitVector& z, double value, std::uint64_t evaluation)
    {
        if (!m_set || value < m_value) {
            m_set   = true;
            m_value = value;
            m_z     = z;
            m_trace.push_back({evaluation, value});
        }
        else if (value == m_value && z < m_z) {
            m_z = z;
        }
    }

    bool has_value() const
    {
        return m_set;
    }

    double value() const
    {
        return m_value;
    }

    RunOutcome finish(std::uint64_t evaluations) &&
    {
        return {std::move(m_z), evaluations, std::move(m_trace)};
    }

private:
    bool m_set     = false;
    double m_value = 0.0;
    BitVector m_z;
    std::vector<TracePoint> m_trace;
};

/// Local fields f_i = P_i + sum_j Q_ij z_j, so the flip delta of i is
/// (1 - 2 z_i) f_i in O(1) and a flip updates O(degree) fields.
class LocalField
{
public:
    LocalField(const QuboProblem& q, BitVector z)
        : m_q(q)
        , m_z(std::move(z))
        , m_field(q.size())
    {
        for (std::size_t i = 0; i < q.size(); ++i) {
            double f       = q.linear()[i];
            const auto row = q.quadratic_row(i);
            for (auto j : q.neighbors(i)) {
                if (m_z[j]) {
                    f += row[j];
                }
            }
            m_field[i] = f;
        }
    }

    double delta(std::size_t i) const
    {
        return m_z[i] ? -m_field[i] : m_field[i];
    }

    void flip(std::size_t k)
    {
        const double sign = m_z[k] ? -1.0 : 1.0;
        m_z.flip(k);
        const auto row = m_q.quadratic_row(k);
        for (auto j : m_q.neighbors(k)) {
            m_field[j] += sign * row[j];
        }
    }

    const BitVector& state() const
    {
        return m_z;
    }

private:
    const QuboProblem& m_q;
    BitVector m_z;
    std::vector<double> m_field;
};

BitVector random_bits(std::size_t size, Rng& rng);

using SingleRun = std::function<RunOutcome(const QuboProblem&, const SolverConfig&, Rng&, std::uint64_t budget)>;

/// Splits the budget over config.restarts runs, seeds run r with
/// derive_seed(config.seed, r), and merges by exact objective with
/// lexicographic tie-break. Independent of thread scheduling.
SolveResult run_restarts(const QuboProblem& q, const SolverConfig& config, const SingleRun& run);

} // namespace epiqubo::detail
