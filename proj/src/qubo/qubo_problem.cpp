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
#include "epiqubo/qubo/qubo_problem.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>

namespace epiqubo
{

QuboProblem::QuboProblem(std::size_t size, double offset)
    : m_linear(size, 0.0)
    , m_pairs(size * size, 0.0)
    , m_neighbors(size)
    , m_offset(offset)
{
}

QuboProblem::QuboProblem(std::vector<double> linear, const std::vector<QuadraticTerm>& quadratic, double offset)
    : QuboProblem(linear.size(), offset)
{
    m_linear = std::move(linear);
    for (const auto& term : quadratic) {
        add_quadratic(term.i, term.j, term.value);
    }
}

void QuboProblem::check_pair(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size()) {
        throw ValidationError("QUBO index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for " + std::to_string(size()) + " variables");
    }
    if (i == j) {
        throw ValidationError("QUBO pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is a self-pair; use the linear coefficient");
    }
}

void QuboProblem::link(std::size_t i, std::size_t j)
{
    auto insert = [](std::vector<std::size_t>& list, std::size_t k) {
        auto it = std::lower_bound(list.begin(), list.end(), k);
        if (it == list.end() || *it != k) {
            list.insert(it, k);
        }
    };
    insert(m_neighbors[i], j);
    insert(m_neighbors[j], i);
}

double QuboProblem::quadratic(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size()) {
        throw ValidationError("QUBO index out of range");
    }
    return m_pairs[i * size() + j];
}

std::vector<QuadraticTerm> QuboProblem::quadratic_terms() const
{
    std::vector<QuadraticTerm> terms;
    for (std::size_t i = 0; i < size(); ++i) {
        for (auto j : m_neighbors[i]) {
            const double v = m_pairs[i * size() + j];
            if (j > i && v != 0.0) {
                terms.push_back({i, j, v});
            }
        }
    }
    return terms;
}

void QuboProblem::set_linear(std::size_t i, double value)
{
    m_linear.at(i) = value;
}

void QuboProblem::add_linear(std::size_t i, double value)
{
    m_linear.at(i) += value;
}

void QuboProblem::add_quadratic(std::size_t i, std::size_t j, double value)
{
    check_pair(i, j);
    if (value == 0.0) {
        return;
    }
    m_pairs[i * size() + j] += value;
    m_pairs[j * size() + i] = m_pairs[i * size() + j];
    link(i, j);
}

void QuboProblem::set_quadratic(std::size_t i, std::size_t j, double value)
{
    check_pair(i, j);
    m_pairs[i * size() + j] = value;
    m_pairs[j * size() + i] = value;
    if (value != 0.0) {
        link(i, j);
    }
}

bool operator==(const QuboProblem& a, const QuboProblem& b)
{
    return a.m_offset == b.m_offset && a.m_linear == b.m_linear && a.quadratic_terms() == b.quadratic_terms();
}

double evaluate(const QuboProblem& q, const BitVector& z)
{
    if (z.size() != q.size()) {
        throw DimensionError("QUBO assignment", q.size(), z.size());
    }
    double value = q.offset();
    for (std::size_t d = 0; d < q.size(); ++d) {
        if (!z[d]) {
            continue;
        }
        double field    = q.linear()[d];
        const auto row  = q.quadratic_row(d);
        for (auto i : q.neighbors(d)) {
            if (i >= d) {
                break;
            }
            if (z[i]) {
                field += row[i];
            }
        }
        value += field;
    }
    return value;
}

double incremental_delta(const QuboProblem& q, const BitVector& z, std::size_t i)
{
    if (z.size() != q.size()) {
        throw DimensionError("QUBO assignment", q.size(), z.size());
    }
    if (i >= q.size()) {
        throw ValidationError("flip index " + std::to_string(i) + " out of range for " +
                              std::to_string(q.size()) + " variables");
    }
    double field   = q.linear()[i];
    const auto row = q.quadratic_row(i);
    for (auto j : q.neighbors(i)) {
        if (z[j]) {
            field += row[j];
        }
    }
    return z[i] ? -field : field;
}

ControlVector to_control(const BitVector& z)
{
    ControlVector u(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        u.set(i, !z[i]);
    }
    return u;
}

BitVector from_control(const ControlVector& u)
{
    BitVector z(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        z.set(i, !u[i]);
    }
    return z;
}

} // namespace epiqubo
