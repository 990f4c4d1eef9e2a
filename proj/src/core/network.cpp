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
#include "epiqubo/core/network.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace epiqubo
{

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw DimensionError("matrix row " + std::to_string(i), rows.size(), rows[i].size());
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

SquareMatrix SquareMatrix::identity(std::size_t size)
{
    SquareMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

LocationNetwork::LocationNetwork(std::vector<double> populations, SquareMatrix weights,
                                 std::vector<std::string> names)
    : m_populations(std::move(populations))
    , m_weights(std::move(weights))
    , m_names(std::move(names))
{
    if (m_populations.empty()) {
        throw ValidationError("a network needs at least one location");
    }
    if (m_weights.size() != m_populations.size()) {
        throw DimensionError("weight matrix", m_populations.size(), m_weights.size());
    }
    if (!m_names.empty() && m_names.size() != m_populations.size()) {
        throw DimensionError("location names", m_populations.size(), m_names.size());
    }
}

std::string LocationNetwork::name(std::size_t i) const
{
    return m_names.empty() ? std::to_string(i) : m_names[i];
}

double LocationNetwork::total_population() const
{
    return std::accumulate(m_populations.begin(), m_populations.end(), 0.0);
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < violations.size(); ++k) {
        os << (k ? "; " : "") << violations[k];
    }
    return os.str();
}

ValidationReport validate_network(const LocationNetwork& net)
{
    ValidationReport report;
    const auto m = net.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double n = net.population(i);
        if (!std::isfinite(n) || n <= 0.0) {
            report.violations.push_back("nonpositive population at " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double a = net.weight(i, j);
            const auto where = std::to_string(i) + (i == j ? "" : "," + std::to_string(j));
            if (!std::isfinite(a)) {
                report.violations.push_back("non-finite weight at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
            else if (i == j && a != 0.0) {
                report.violations.push_back("nonzero diagonal at " + where);
            }
            else if (a < 0.0) {
                report.violations.push_back("negative weight at (" + where + ")");
            }
            else if (a > 1.0) {
                report.warnings.push_back("weight > 1 at (" + where + ")");
            }
        }
    }
    return report;
}

void require_valid(const LocationNetwork& net)
{
    const auto report = validate_network(net);
    if (!report.ok()) {
        throw ValidationError("invalid network: " + report.summary());
    }
}

double invariance_bound(const LocationNetwork& net)
{
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < net.size(); ++i) {
        double inflow = 0.0;
        for (std::size_t j = 0; j < net.size(); ++j) {
            inflow += net.weight(i, j) * net.population(j) / net.population(i);
        }
        bound = std::min(bound, 1.0 / (1.0 + inflow));
    }
    return bound;
}

} // namespace epiqubo
