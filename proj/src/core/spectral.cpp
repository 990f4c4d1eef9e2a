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
#include "epiqubo/core/spectral.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace epiqubo
{

namespace
{

/// Tarjan's algorithm on the graph i -> j iff B_ij > 0, i != j.
class StrongComponents
{
public:
    explicit StrongComponents(const SquareMatrix& matrix)
        : m_matrix(matrix)
        , m_index(matrix.size(), unvisited)
        , m_lowlink(matrix.size(), 0)
        , m_on_stack(matrix.size(), false)
    {
        for (std::size_t v = 0; v < matrix.size(); ++v) {
            if (m_index[v] == unvisited) {
                connect(v);
            }
        }
    }

    const std::vector<std::vector<std::size_t>>& components() const
    {
        return m_components;
    }

private:
    static constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    void connect(std::size_t v)
    {
        m_index[v] = m_lowlink[v] = m_counter++;
        m_stack.push_back(v);
        m_on_stack[v] = true;
        for (std::size_t w = 0; w < m_matrix.size(); ++w) {
            if (w == v || m_matrix(v, w) <= 0.0) {
                continue;
            }
            if (m_index[w] == unvisited) {
                connect(w);
                m_lowlink[v] = std::min(m_lowlink[v], m_lowlink[w]);
            }
            else if (m_on_stack[w]) {
                m_lowlink[v] = std::min(m_lowlink[v], m_index[w]);
            }
        }
        if (m_lowlink[v] == m_index[v]) {
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = m_stack.back();
                m_stack.pop_back();
                m_on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            m_components.push_back(std::move(component));
        }
    }

    const SquareMatrix& m_matrix;
    std::vector<std::size_t> m_index;
    std::vector<std::size_t> m_lowlink;
    std::vector<bool> m_on_stack;
    std::vector<std::size_t> m_stack;
    std::size_t m_counter = 0;
    std::vector<std::vector<std::size_t>> m_components;
};

double irreducible_perron_root(const SquareMatrix& block, const PowerIterationOptions& options)
{
    const auto m = block.size();
    if (m == 1) {
        return block(0, 0);
    }

    bool zero_diagonal = false;
    for (std::size_t i = 0; i < m; ++i) {
        zero_diagonal = zero_diagonal || block(i, i) == 0.0;
    }
    // Irreducible with a positive diagonal is primitive, so the Perron root
    // strictly dominates every other eigenvalue in modulus.
    const double shift = zero_diagonal ? 1.0 : 0.0;

    std::vector<double> v(m, 1.0);
    std::vector<double> w(m);
    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto row = block.row(i);
            double acc = shift * v[i];
            for (std::size_t j = 0; j < m; ++j) {
                acc += row[j] * v[j];
            }
            w[i] = acc;
            const double ratio = acc / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            scale = std::max(scale, acc);
        }
        if (!std::isfinite(hi) || !(scale > 0.0)) {
            break;
        }
        if (hi - lo <= options.relative_tolerance * hi) {
            return 0.5 * (lo + hi) - shift;
        }
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = w[i] / scale;
        }
    }
    throw ConvergenceError("power iteration did not converge within " + std::to_string(options.max_iterations) +
                           " iterations (relative tolerance " + std::to_string(options.relative_tolerance) + ")");
}

} // namespace

double spectral_radius(const SquareMatrix& matrix, PowerIterationOptions options)
{
    const auto m = matrix.size();
    if (m == 0) {
        throw ValidationError("spectral radius of an empty matrix");
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(matrix(i, j)) || matrix(i, j) < 0.0) {
                throw ValidationError("spectral radius needs a finite nonnegative matrix; entry (" +
                                      std::to_string(i) + "," + std::to_string(j) + ") is " +
                                      std::to_string(matrix(i, j)));
            }
        }
    }

    double rho = 0.0;
    const StrongComponents scc(matrix);
    for (const auto& component : scc.components()) {
        SquareMatrix block(component.size());
        for (std::size_t a = 0; a < component.size(); ++a) {
            for (std::size_t b = 0; b < component.size(); ++b) {
                block(a, b) = matrix(component[a], component[b]);
            }
        }
        rho = std::max(rho, irreducible_perron_root(block, options));
    }
    return rho;
}

double infection_rate_from_r0(double r0, double mu, const LocationNetwork& net, PowerIterationOptions options)
{
    if (!(r0 >= 0.0) || !std::isfinite(r0)) {
        throw ValidationError("R0 must be finite and nonnegative");
    }
    if (!(mu > 0.0) || mu > 1.0) {
        throw ValidationError("recovery rate must lie in (0, 1] for R0 calibration");
    }
    SquareMatrix shifted = net.weights();
    for (std::size_t i = 0; i < net.size(); ++i) {
        shifted(i, i) += 1.0;
    }
    return r0 * mu / spectral_radius(shifted, options);
}

double spectral_growth_factor(const LocationNetwork& net, const ControlVector& u, PowerIterationOptions options)
{
    if (u.size() != net.size()) {
        throw DimensionError("control vector", net.size(), u.size());
    }
    SquareMatrix growth = SquareMatrix::identity(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        if (u[i]) {
            continue;
        }
        for (std::size_t j = 0; j < net.size(); ++j) {
            growth(i, j) += net.weight(i, j);
        }
    }
    return spectral_radius(growth, options);
}

} // namespace epiqubo
