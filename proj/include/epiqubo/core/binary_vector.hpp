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

#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace epiqubo
{

/// Fixed-length vector over {0,1}. The tag keeps control vectors (1 = isolated)
/// and QUBO variables (1 = free) from being mixed up at compile time.
template <class Tag>
class BinaryVector
{
public:
    BinaryVector() = default;

    explicit BinaryVector(std::size_t size, bool value = false)
        : m_bits(size, value ? 1 : 0)
    {
    }

    BinaryVector(std::initializer_list<int> bits)
        : BinaryVector(std::vector<int>(bits))
    {
    }

    explicit BinaryVector(const std::vector<int>& bits)
    {
        m_bits.reserve(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != 0 && bits[i] != 1) {
                throw ValidationError("binary vector entry " + std::to_string(i) + " is " +
                                      std::to_string(bits[i]) + ", expected 0 or 1");
            }
            m_bits.push_back(static_cast<std::uint8_t>(bits[i]));
        }
    }

    static BinaryVector ones(std::size_t size)
    {
        return BinaryVector(size, true);
    }

    /// Bit i is the i-th most significant of the low `size` bits of `mask`,
    /// so counting mask upward enumerates vectors in lexicographic order.
    static BinaryVector from_mask(std::uint64_t mask, std::size_t size)
    {
        BinaryVector v(size);
        for (std::size_t i = 0; i < size; ++i) {
            v.m_bits[i] = static_cast<std::uint8_t>((mask >> (size - 1 - i)) & 1u);
        }
        return v;
    }

    std::size_t size() const
    {
        return m_bits.size();
    }

    bool operator[](std::size_t i) const
    {
        return m_bits[i] != 0;
    }

    bool at(std::size_t i) const
    {
        return m_bits.at(i) != 0;
    }

    void set(std::size_t i, bool value)
    {
        m_bits.at(i) = value ? 1 : 0;
    }

    void flip(std::size_t i)
    {
        m_bits[i] ^= 1u;
    }

    std::size_t count() const
    {
        return static_cast<std::size_t>(std::count(m_bits.begin(), m_bits.end(), std::uint8_t{1}));
    }

    std::span<const std::uint8_t> bits() const
    {
        return m_bits;
    }

    std::string to_string() const
    {
        std::string s;
        s.reserve(m_bits.size());
        for (auto b : m_bits) {
            s.push_back(b ? '1' : '0');
        }
        return s;
    }

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> m_bits;
};

/// u_i = 1 if location i is isolated for the step.
using ControlVector = BinaryVector<struct ControlTag>;

/// QUBO decision variables, z_i = 1 - u_i.
using BitVector = BinaryVector<struct QuboBitTag>;

} // namespace epiqubo
