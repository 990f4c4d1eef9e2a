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

#include "epiqubo/core/epidemic.hpp"

#include <cstdint>
#include <string_view>

namespace epiqubo
{

enum class SyntheticProfile
{
    ring,
    complete,
    gravity,
};

std::string_view to_string(SyntheticProfile profile);
SyntheticProfile parse_synthetic_profile(std::string_view text);

/// Seeded stand-in for commuting data. Populations are log-uniform in
/// [5e4, 5e6] for every profile.
///   ring      A_{i,i+1} = A_{i+1,i} = 0.5 (indices mod M)
///   complete  A_ij = 0.5 / (M - 1) for i != j
///   gravity   random positions in the unit square, A_ij proportional to
///             n_j / d_ij, scaled so the largest weight is 0.5
/// Throws ValidationError for m == 0.
LocationNetwork generate_synthetic(std::size_t m, SyntheticProfile profile, std::uint64_t seed);

/// Seeded initial state: x_i = fraction * n_i * U(0,1), no removed.
EpidemicState synthetic_cases(const LocationNetwork& net, ModelKind kind, double fraction, std::uint64_t seed);

} // namespace epiqubo
