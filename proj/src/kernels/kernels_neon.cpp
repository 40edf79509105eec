/**************************************************************************
 * kernels_neon.cpp
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

#include "kernels_internal.hpp"

#if defined(BCHMP_BUILD_NEON)

#include <arm_neon.h>

#include <bit>

namespace bchmp::kernels {

namespace {

void neon_add_mod_p_u8(std::uint8_t* y, const std::uint8_t* d, std::size_t n,
                       std::uint8_t p) {
    const uint8x16_t vp = vdupq_n_u8(p);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t t = vaddq_u8(vld1q_u8(y + i), vld1q_u8(d + i));
        t = vminq_u8(t, vsubq_u8(t, vp));
        vst1q_u8(y + i, t);
    }
    for (; i < n; ++i) {
        std::uint8_t t = static_cast<std::uint8_t>(y[i] + d[i]);
        y[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
    }
}

inline std::size_t nonzero_in_block(uint8x16_t v) {
    uint8x16_t ones = vandq_u8(vtstq_u8(v, v), vdupq_n_u8(1));
    return vaddvq_u8(ones);
}

std::size_t neon_count_nonzero_u8(const std::uint8_t* y, std::size_t n) {
    std::size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) c += nonzero_in_block(vld1q_u8(y + i));
    for (; i < n; ++i) c += y[i] != 0;
    return c;
}

std::size_t neon_count_nonzero_any_u8(const std::uint8_t* const* planes,
                                      std::size_t nplanes, std::size_t n) {
    if (nplanes == 1) return neon_count_nonzero_u8(planes[0], n);
    std::size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t acc = vld1q_u8(planes[0] + i);
        for (std::size_t k = 1; k < nplanes; ++k)
            acc = vorrq_u8(acc, vld1q_u8(planes[k] + i));
        c += nonzero_in_block(acc);
    }
    for (; i < n; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += acc != 0;
    }
    return c;
}

void neon_xor_u64(std::uint64_t* y, const std::uint64_t* d, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t a = vld1q_u64(y + i);
        uint64x2_t b = vld1q_u64(d + i);
        vst1q_u64(y + i, veorq_u64(a, b));
    }
    for (; i < nwords; ++i) y[i] ^= d[i];
}

inline std::size_t popcount_block(uint8x16_t v) {
    return vaddvq_u8(vcntq_u8(v));
}

std::size_t neon_popcount_u64(const std::uint64_t* w, std::size_t nwords) {
    std::size_t c = 0, i = 0;
    for (; i + 2 <= nwords; i += 2)
        c += popcount_block(vreinterpretq_u8_u64(vld1q_u64(w + i)));
    for (; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

std::size_t neon_popcount_or_u64(const std::uint64_t* const* planes,
                                 std::size_t nplanes, std::size_t nwords) {
    if (nplanes == 1) return neon_popcount_u64(planes[0], nwords);
    std::size_t c = 0, i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t acc = vld1q_u64(planes[0] + i);
        for (std::size_t k = 1; k < nplanes; ++k)
            acc = vorrq_u64(acc, vld1q_u64(planes[k] + i));
        c += popcount_block(vreinterpretq_u8_u64(acc));
    }
    for (; i < nwords; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += std::popcount(acc);
    }
    return c;
}

constexpr Ops kNeonOps = {
    "neon",
    neon_add_mod_p_u8,
    neon_count_nonzero_u8,
    neon_count_nonzero_any_u8,
    neon_xor_u64,
    neon_popcount_u64,
    neon_popcount_or_u64,
};

} // namespace

const Ops& neon_ops_impl() { return kNeonOps; }

} // namespace bchmp::kernels

#endif // BCHMP_BUILD_NEON
