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
#include "epiqubo/io/synthetic.hpp"
#include "epiqubo/core/errors.hpp"
#include "epiqubo/solvers/rng.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

namespace epiqubo
{

namespace
{

constexpr double min_population = 5e4;
constexpr double max_population = 5e6;
constexpr double max_weight     = 0.5;

// Separate streams keep populations independent of the layout draws.
constexpr std::uint64_t population_stream = 1;
constexpr std::uint64_t position_stream   = 2;
constexpr std::uint64_t cases_stream      = 3;

} // namespace

std::string_view to_string(SyntheticProfile profile)
{
    switch (profile) {
    case SyntheticProfile::ring:
        return "ring";
    case SyntheticProfile::complete:
        return "complete";
    case SyntheticProfile::gravity:
        return "gravity";
    }
    return "?";
}

SyntheticProfile parse_synthetic_profile(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto p : {SyntheticProfile::ring, SyntheticProfile::complete, SyntheticProfile::gravity}) {
        if (lower == to_string(p)) {
            return p;
        }
    }
    throw ValidationError("unknown synthetic profile '" + std::string(text) + "' (expected ring, complete or gravity)");
}

LocationNetwork generate_synthetic(std::size_t m, SyntheticProfile profile, std::uint64_t seed)
{
    if (m == 0) {
        throw ValidationError("synthetic network needs at least one location");
    }
    Rng pop_rng(derive_seed(seed, population_stream));
    const double lo = std::log(min_population);
    const double hi = std::log(max_population);
    std::vector<double> populations(m);
    for (auto& n : populations) {
        n = std::round(std::exp(pop_rng.uniform(lo, hi)));
    }

    SquareMatrix weights(m);
    switch (profile) {
    case SyntheticProfile::ring:
        for (std::size_t i = 0; m > 1 && i < m; ++i) {
            const auto j = (i + 1) % m;
            weights(i, j) = max_weight;
            weights(j, i) = max_weight;
        }
        break;
    case SyntheticProfile::complete:
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) {
                    weights(i, j) = max_weight / static_cast<double>(m - 1);
                }
            }
        }
        break;
    case SyntheticProfile::gravity: {
        Rng pos_rng(derive_seed(seed, position_stream));
        std::vector<std::array<double, 2>> points(m);
        for (auto& p : points) {
            p = {pos_rng.uniform(), pos_rng.uniform()};
        }
        double largest = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) {
                    continue;
                }
                const double d = std::max(std::hypot(points[i][0] - points[j][0], points[i][1] - points[j][1]), 1e-9);
                weights(i, j) = populations[j] / d;
                largest       = std::max(largest, weights(i, j));
            }
        }
        if (largest > 0.0) {
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    weights(i, j) *= max_weight / largest;
                }
            }
        }
        break;
    }
    }
    return LocationNetwork(std::move(populations), std::move(weights));
}

EpidemicState synthetic_cases(const LocationNetwork& net, ModelKind kind, double fraction, std::uint64_t seed)
{
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw ValidationError("infected fraction must lie in [0, 1]");
    }
    Rng rng(derive_seed(seed, cases_stream));
    auto state = EpidemicState::zero(net.size(), kind);
    for (std::size_t i = 0; i < net.size(); ++i) {
        state.infected[i] = fraction * net.population(i) * rng.uniform();
    }
    return state;
}

} // namespace epiqubo
