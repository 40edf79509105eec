/**************************************************************************
 * kernels.cpp
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

#include "bchmp/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstring>
#include <string>

#include "bchmp/errors.hpp"
#include "kernels_internal.hpp"

namespace bchmp::kernels {

namespace {

void scalar_add_mod_p_u8(std::uint8_t* y, const std::uint8_t* d, std::size_t n,
                         std::uint8_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t t = static_cast<std::uint8_t>(y[i] + d[i]);
        y[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
    }
}

std::size_t scalar_count_nonzero_u8(const std::uint8_t* y, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += y[i] != 0;
    return c;
}

std::size_t scalar_count_nonzero_any_u8(const std::uint8_t* const* planes,
                                        std::size_t nplanes, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += acc != 0;
    }
    return c;
}

void scalar_xor_u64(std::uint64_t* y, const std::uint64_t* d, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) y[i] ^= d[i];
}

std::size_t scalar_popcount_u64(const std::uint64_t* w, std::size_t nwords) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

std::size_t scalar_popcount_or_u64(const std::uint64_t* const* planes,
                                   std::size_t nplanes, std::size_t nwords) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += std::popcount(acc);
    }
    return c;
}

constexpr Ops kScalarOps = {
    "scalar",
    scalar_add_mod_p_u8,
    scalar_count_nonzero_u8,
    scalar_count_nonzero_any_u8,
    scalar_xor_u64,
    scalar_popcount_u64,
    scalar_popcount_or_u64,
};

std::atomic<const Ops*> g_forced{nullptr};

const Ops* detect_best() {
#if defined(BCHMP_BUILD_AVX2)
    if (avx2_supported()) return &avx2_ops_impl();
#elif defined(BCHMP_BUILD_NEON)
    return &neon_ops_impl();
#endif
    return &kScalarOps;
}

} // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active_ops() {
    const Ops* forced = g_forced.load(std::memory_order_acquire);
    if (forced) return *forced;
    static const Ops* best = detect_best();
    return *best;
}

const char* const* available_implementations() {
#if defined(BCHMP_BUILD_AVX2)
    static const char* with_avx2[] = {"scalar", "avx2", nullptr};
    static const char* scalar_only[] = {"scalar", nullptr};
    return avx2_supported() ? with_avx2 : scalar_only;
#elif defined(BCHMP_BUILD_NEON)
    static const char* with_neon[] = {"scalar", "neon", nullptr};
    return with_neon;
#else
    static const char* scalar_only[] = {"scalar", nullptr};
    return scalar_only;
#endif
}

void force_implementation(const char* name) {
    std::string s(name);
    if (s == "auto") {
        g_forced.store(nullptr, std::memory_order_release);
        return;
    }
    if (s == "scalar") {
        g_forced.store(&kScalarOps, std::memory_order_release);
        return;
    }
#if defined(BCHMP_BUILD_AVX2)
    if (s == "avx2") {
        if (!avx2_supported())
            throw param_error("avx2 kernels not supported on this CPU");
        g_forced.store(&avx2_ops_impl(), std::memory_order_release);
        return;
    }
#endif
#if defined(BCHMP_BUILD_NEON)
    if (s == "neon") {
        g_forced.store(&neon_ops_impl(), std::memory_order_release);
        return;
    }
#endif
    throw param_error("unknown kernel implementation '" + s + "'");
}

} // namespace bchmp::kernels
