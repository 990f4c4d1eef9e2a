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

#include <cstddef>
#include <span>
#include <vector>

namespace epiqubo
{

struct QuadraticTerm {
    std::size_t i; ///< i < j
    std::size_t j;
    double value;

    friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/// value(z) = offset + sum_i P_i z_i + sum_{i<j} Q_ij z_i z_j over z in {0,1}^M.
///
/// Pairwise coefficients are kept in a dense symmetric table (both (i,j) and
/// (j,i) hold Q_ij) together with per-variable neighbour lists, so single-flip
/// deltas cost O(degree).
class QuboProblem
{
public:
    QuboProblem() = default;

    explicit QuboProblem(std::size_t size, double offset = 0.0);

    QuboProblem(std::vector<double> linear, const std::vector<QuadraticTerm>& quadratic, double offset);

    std::size_t size() const
    {
        return m_linear.size();
    }

    double offset() const
    {
        return m_offset;
    }

    double linear(std::size_t i) const
    {
        return m_linear.at(i);
    }

    std::span<const double> linear() const
    {
        return m_linear;
    }

    /// Q for the unordered pair {i, j}; zero when absent. Self-pairs are zero.
    double quadratic(std::size_t i, std::size_t j) const;

    /// Row i of the symmetric pair table; entry i is zero.
    std::span<const double> quadratic_row(std::size_t i) const
    {
        return {m_pairs.data() + i * size(), size()};
    }

    /// Variables sharing a nonzero pairwise coefficient with i, ascending.
    std::span<const std::size_t> neighbors(std::size_t i) const
    {
        return m_neighbors.at(i);
    }

    /// Nonzero pairs with i < j in lexicographic order.
    std::vector<QuadraticTerm> quadratic_terms() const;

    void set_offset(double value)
    {
        m_offset = value;
    }

    void set_linear(std::size_t i, double value);

    void add_linear(std::size_t i, double value);

    /// Accumulates into the pair {i, j}; (j, i) folds onto (i, j). i == j is rejected.
    void add_quadratic(std::size_t i, std::size_t j, double value);

    void set_quadratic(std::size_t i, std::size_t j, double value);

    friend bool operator==(const QuboProblem& a, const QuboProblem& b);

private:
    void check_pair(std::size_t i, std::size_t j) const;
    void link(std::size_t i, std::size_t j);

    std::vector<double> m_linear;
    std::vector<double> m_pairs;
    std::vector<std::vector<std::size_t>> m_neighbors;
    double m_offset = 0.0;
};

/// Objective value. Terms are accumulated variable by variable in index order,
/// each set bit d contributing P_d + sum_{i<d, z_i=1} Q_id; the exhaustive
/// solver reproduces this order exactly, so both agree bit for bit.
double evaluate(const QuboProblem& q, const BitVector& z);

/// value(z with bit i flipped) - value(z), in O(degree of i).
double incremental_delta(const QuboProblem& q, const BitVector& z, std::size_t i);

/// u_i = 1 - z_i.
ControlVector to_control(const BitVector& z);

/// z_i = 1 - u_i.
BitVector from_control(const ControlVector& u);

} // namespace epiqubo
