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
#include "epiqubo/core/network.hpp"

#include <cstddef>

namespace epiqubo
{

struct PowerIterationOptions {
    double relative_tolerance  = 1e-12;
    std::size_t max_iterations = 100000;
};

/// Perron root (spectral radius) of a nonnegative square matrix.
///
/// The matrix is split into strongly connected blocks; the spectral radius is
/// the largest over the diagonal blocks. Each irreducible block is power
/// iterated from the all-ones vector and stopped when the Collatz-Wielandt
/// bracket min_i (Bv)_i/v_i <= rho <= max_i (Bv)_i/v_i is relatively tighter
/// than the tolerance. Blocks with a zero on the diagonal are shifted by I to
/// make them primitive. Throws ConvergenceError if a block does not converge
/// and ValidationError for negative or non-finite entries.
double spectral_radius(const SquareMatrix& matrix, PowerIterationOptions options = {});

/// lambda = r0 * mu / rho(A + I).
double infection_rate_from_r0(double r0, double mu, const LocationNetwork& net,
                              PowerIterationOptions options = {});

/// rho(I + diag(1 - u) A): governs local stability of the disease-free state
/// under a fixed control. Diagnostic only.
double spectral_growth_factor(const LocationNetwork& net, const ControlVector& u,
                              PowerIterationOptions options = {});

} // namespace epiqubo
