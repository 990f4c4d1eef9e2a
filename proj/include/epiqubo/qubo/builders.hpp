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
#include "epiqubo/qubo/qubo_problem.hpp"

#include <cstdint>
#include <string_view>

namespace epiqubo
{

// All builders compile the two-step mobility-ban window: the QUBO value of z
// equals the window cost of u = 1 - z, offset included. The horizon is fixed
// at two steps; longer windows give higher-degree polynomials.

/// Largest network for which 2^M enumeration is accepted.
inline constexpr std::size_t max_enumeration_size = 25;

/// Exact reconstruction from simulations. The two-step infection total h(z)
/// is multilinear of degree two in z, so
///   c = h(0), P_i = h(e_i) - c, Q_ij = h(e_i + e_j) - h(e_i) - h(e_j) + c
/// recovers it from 1 + M + M(M-1)/2 runs. The control term, linear in z, is
/// added in closed form. Works for both model kinds and serves as the
/// reference the closed-form builders are checked against.
QuboProblem build_qubo_numeric(const LocationNetwork& net, const EpidemicParams& params,
                               const EpidemicState& initial, double gamma);

/// Closed-form coefficients for the SIS model. The offset is the simulated
/// cost of z = 0, so values (not only minimizers) match the window cost.
QuboProblem build_qubo_sis_analytic(const LocationNetwork& net, const EpidemicParams& params,
                                    const EpidemicState& initial, double gamma);

/// Closed-form coefficients for the SIR model; same offset policy.
QuboProblem build_qubo_sir_analytic(const LocationNetwork& net, const EpidemicParams& params,
                                    const EpidemicState& initial, double gamma);

enum class BuilderKind
{
    analytic,
    numeric,
};

std::string_view to_string(BuilderKind kind);
BuilderKind parse_builder_kind(std::string_view text);

/// Picks the analytic builder matching params.kind, or the numeric one.
QuboProblem build_qubo(BuilderKind builder, const LocationNetwork& net, const EpidemicParams& params,
                       const EpidemicState& initial, double gamma);

/// Exhaustive search over u in {0,1}^M of the two-step window cost.
/// Ties go to the lexicographically smallest u. Throws for M > 25.
ControlVector solve_bruteforce_problem1(const LocationNetwork& net, const EpidemicParams& params,
                                        const EpidemicState& initial, double gamma);

} // namespace epiqubo
