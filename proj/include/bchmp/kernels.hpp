/**************************************************************************
 * kernels.hpp
 *
 * Copyright 2026 The bchmp authors
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
 **************************************************************************/

#pragma once

#include <cstddef>
#include <cstdint>

namespace bchmp::kernels {

/**
 * Vector kernels for the codeword-enumeration inner loop.
 *
 * Odd characteristic uses one byte plane per base-p digit (entries in
 * [0, p), p <= 127); characteristic 2 uses bit-packed 64-bit word planes.
 * All kernels are pure functions of their buffers and safe to call from
 * multiple threads on disjoint data.
 */
struct Ops {
    const char* name;

    /// y[i] = (y[i] + d[i]) mod p. Inputs must already be reduced mod p.
    void (*add_mod_p_u8)(std::uint8_t* y, const std::uint8_t* d, std::size_t n,
                         std::uint8_t p);

    /// Number of nonzero bytes.
    std::size_t (*count_nonzero_u8)(const std::uint8_t* y, std::size_t n);

    /// Number of positions where any of the planes has a nonzero byte.
    std::size_t (*count_nonzero_any_u8)(const std::uint8_t* const* planes,
                                        std::size_t nplanes, std::size_t n);

    /// y[i] ^= d[i] over 64-bit words.
    void (*xor_u64)(std::uint64_t* y, const std::uint64_t* d, std::size_t nwords);

    /// Total popcount of the words.
    std::size_t (*popcount_u64)(const std::uint64_t* w, std::size_t nwords);

    /// Popcount of the bitwise OR across planes.
    std::size_t (*popcount_or_u64)(const std::uint64_t* const* planes,
                                   std::size_t nplanes, std::size_t nwords);
};

/// Portable reference implementation.
const Ops& scalar_ops();

/// Implementation selected for the running CPU (AVX2/NEON when available,
/// scalar otherwise). Honors force_implementation().
const Ops& active_ops();

/// Names of all implementations compiled in and usable on this CPU.
/// Terminated by nullptr; "scalar" is always present.
const char* const* available_implementations();

/// Pin the active implementation ("scalar", "avx2", "neon", or "auto").
/// Throws param_error for unknown or unavailable names.
void force_implementation(const char* name);

} // namespace bchmp::kernels
