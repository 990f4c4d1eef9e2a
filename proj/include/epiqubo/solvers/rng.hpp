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
#include <cstdint>
#include <random>

namespace epiqubo
{

/// mt19937_64 with portable conversions. The standard distributions are
/// implementation-defined, so uniform draws are built from raw engine output
/// to keep seeded runs identical across standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed)
        : m_engine(seed)
    {
    }

    std::uint64_t next()
    {
        return m_engine();
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in [0, n), n > 0, without modulo bias.
    std::size_t below(std::size_t n);

    bool bernoulli(double p)
    {
        return uniform() < p;
    }

private:
    std::mt19937_64 m_engine;
};

/// Independent substream seed: splitmix64 finalizer over (base, stream).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

} // namespace epiqubo
