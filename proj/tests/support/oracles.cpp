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
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle
{

epiqubo::LocationNetwork Instance::network() const
{
    return epiqubo::LocationNetwork(n, epiqubo::SquareMatrix::from_rows(a));
}

epiqubo::EpidemicParams Instance::params() const
{
    return {kind, lambda, mu};
}

epiqubo::EpidemicState Instance::state() const
{
    epiqubo::EpidemicState s;
    s.infected = x;
    if (kind == epiqubo::ModelKind::SIR) {
        s.removed = y;
    }
    return s;
}

Instance random_instance(epiqubo::Rng& rng, epiqubo::ModelKind kind, std::size_t m)
{
    Instance inst;
    inst.kind = kind;
    inst.n.resize(m);
    inst.a.assign(m, std::vector<double>(m, 0.0));
    for (auto& n : inst.n) {
        n = rng.uniform(10.0, 1000.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && rng.bernoulli(0.5)) {
                inst.a[i][j] = rng.uniform();
            }
        }
    }
    inst.lambda = (1.0 - rng.uniform()) * invariance_bound(inst);
    inst.mu     = 1.0 - rng.uniform();
    inst.gamma  = rng.uniform(0.0, 0.1);
    inst.x.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        inst.x[i] = rng.uniform() * inst.n[i];
    }
    if (kind == epiqubo::ModelKind::SIR) {
        inst.y.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            inst.y[i] = rng.uniform() * (inst.n[i] - inst.x[i]);
        }
    }
    return inst;
}

double invariance_bound(const Instance& inst)
{
    double bound = 1.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < inst.size(); ++j) {
            s += inst.a[i][j] * inst.n[j] / inst.n[i];
        }
        bound = std::min(bound, 1.0 / (1.0 + s));
    }
    return bound;
}

void step(const Instance& inst, std::vector<double>& x, std::vector<double>& y, const Bits& u)
{
    const auto m = inst.size();
    const bool sir = inst.kind == epiqubo::ModelKind::SIR;
    std::vector<double> nx(m);
    std::vector<double> ny(sir ? m : 0);
    for (std::size_t i = 0; i < m; ++i) {
        double inflow = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            inflow += inst.a[i][j] * x[j];
        }
        const double force       = u[i] ? x[i] : x[i] + inflow;
        const double susceptible = inst.n[i] - x[i] - (sir ? y[i] : 0.0);
        nx[i] = (1.0 - inst.mu) * x[i] + inst.lambda / inst.n[i] * susceptible * force;
        if (sir) {
            ny[i] = y[i] + inst.mu * x[i];
        }
    }
    x = std::move(nx);
    y = std::move(ny);
}

double window_cost(const Instance& inst, const Bits& u)
{
    auto x = inst.x;
    auto y = inst.y;
    double total = 0.0;
    for (int t = 0; t < 2; ++t) {
        step(inst, x, y, u);
        for (double v : x) {
            total += v;
        }
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
        total += inst.gamma * inst.n[i] * u[i];
    }
    return total;
}

Bits bits(std::uint64_t mask, std::size_t m)
{
    Bits out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = static_cast<int>((mask >> (m - 1 - i)) & 1U);
    }
    return out;
}

Optimum best_control(const Instance& inst)
{
    const auto m = inst.size();
    Optimum best{bits(0, m), window_cost(inst, bits(0, m))};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        auto u = bits(mask, m);
        const double value = window_cost(inst, u);
        if (value < best.value) {
            best = {std::move(u), value};
        }
    }
    return best;
}

double qubo_value(const epiqubo::QuboProblem& q, const Bits& z)
{
    double value = q.offset();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!z[i]) {
            continue;
        }
        value += q.linear(i);
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            if (z[j]) {
                value += q.quadratic(i, j);
            }
        }
    }
    return value;
}

Optimum qubo_minimum(const epiqubo::QuboProblem& q)
{
    const auto m = q.size();
    Optimum best{bits(0, m), qubo_value(q, bits(0, m))};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        auto z = bits(mask, m);
        const double value = qubo_value(q, z);
        if (value < best.value) {
            best = {std::move(z), value};
        }
    }
    return best;
}

epiqubo::QuboProblem random_qubo(epiqubo::Rng& rng, std::size_t m, double density)
{
    epiqubo::QuboProblem q(m);
    for (std::size_t i = 0; i < m; ++i) {
        q.set_linear(i, rng.uniform(-1.0, 1.0));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (rng.bernoulli(density)) {
                q.set_quadratic(i, j, rng.uniform(-1.0, 1.0));
            }
        }
    }
    return q;
}

Bits flip_all(const Bits& z)
{
    Bits out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = 1 - z[i];
    }
    return out;
}

double relative_gap(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace oracle
