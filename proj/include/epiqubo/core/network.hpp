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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace epiqubo
{

/// Dense row-major square matrix. Networks stay in the low hundreds of
/// locations, so dense storage is both simpler and faster than sparse.
class SquareMatrix
{
public:
    SquareMatrix() = default;

    explicit SquareMatrix(std::size_t size, double fill = 0.0)
        : m_size(size)
        , m_data(size * size, fill)
    {
    }

    /// Build from nested rows; throws DimensionError unless the rows form a square.
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

    static SquareMatrix identity(std::size_t size);

    std::size_t size() const
    {
        return m_size;
    }

    double operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_size + j];
    }

    double& operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_size + j];
    }

    std::span<const double> row(std::size_t i) const
    {
        return {m_data.data() + i * m_size, m_size};
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t m_size = 0;
    std::vector<double> m_data;
};

/// M locations with populations n_i and directed interaction weights A_ij.
///
/// Construction only checks shapes. Whether the data satisfy the model
/// assumptions (zero diagonal, nonnegative weights, positive populations) is
/// reported by validate_network(), so malformed inputs can still be inspected.
class LocationNetwork
{
public:
    LocationNetwork() = default;

    /// `names` may be empty; otherwise it must have one entry per location.
    LocationNetwork(std::vector<double> populations, SquareMatrix weights,
                    std::vector<std::string> names = {});

    std::size_t size() const
    {
        return m_populations.size();
    }

    double population(std::size_t i) const
    {
        return m_populations[i];
    }

    std::span<const double> populations() const
    {
        return m_populations;
    }

    double weight(std::size_t i, std::size_t j) const
    {
        return m_weights(i, j);
    }

    const SquareMatrix& weights() const
    {
        return m_weights;
    }

    /// Location names in index order; empty when the network is unnamed.
    const std::vector<std::string>& names() const
    {
        return m_names;
    }

    /// Name of location i, falling back to its index.
    std::string name(std::size_t i) const;

    double total_population() const;

    friend bool operator==(const LocationNetwork&, const LocationNetwork&) = default;

private:
    std::vector<double> m_populations;
    SquareMatrix m_weights;
    std::vector<std::string> m_names;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const
    {
        return violations.empty();
    }

    /// Violations joined into one message, for exceptions.
    std::string summary() const;
};

/// Checks the structural assumptions on a network. Weights above 1 are
/// allowed by the model but unusual, so they are warnings, not violations.
ValidationReport validate_network(const LocationNetwork& net);

/// Throws ValidationError with the report summary unless the network is valid.
void require_valid(const LocationNetwork& net);

/// Largest infection rate for which the box prod_i [0, n_i] is positively
/// invariant: min_i (1 + sum_j A_ij n_j / n_i)^-1. The per-location bound must
/// hold at every location, hence the minimum.
double invariance_bound(const LocationNetwork& net);

} // namespace epiqubo
