/**************************************************************************
 * kernels_avx2.cpp
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

#if defined(BCHMP_BUILD_AVX2)

#include <immintrin.h>

#include <bit>

namespace bchmp::kernels {

namespace {

// y and d hold values in [0, p); the sum is at most 2p - 2 <= 252 for
// p <= 127, so the unsigned-min reduction trick is exact: for t < p the
// wrapped t - p is large and min picks t, for t >= p it picks t - p.
void avx2_add_mod_p_u8(std::uint8_t* y, const std::uint8_t* d, std::size_t n,
                       std::uint8_t p) {
    const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
        __m256i t = _mm256_add_epi8(a, b);
        t = _mm256_min_epu8(t, _mm256_sub_epi8(t, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), t);
    }
    for (; i < n; ++i) {
        std::uint8_t t = static_cast<std::uint8_t>(y[i] + d[i]);
        y[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
    }
}

inline std::size_t count_nonzero_block(__m256i v) {
    __m256i z = _mm256_cmpeq_epi8(v, _mm256_setzero_si256());
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(z));
    return 32 - std::popcount(mask);
}

std::size_t avx2_count_nonzero_u8(const std::uint8_t* y, std::size_t n) {
    std::size_t c = 0, i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        c += count_nonzero_block(v);
    }
    for (; i < n; ++i) c += y[i] != 0;
    return c;
}

std::size_t avx2_count_nonzero_any_u8(const std::uint8_t* const* planes,
                                      std::size_t nplanes, std::size_t n) {
    if (nplanes == 1) return avx2_count_nonzero_u8(planes[0], n);
    std::size_t c = 0, i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes[0] + i));
        for (std::size_t k = 1; k < nplanes; ++k)
            acc = _mm256_or_si256(
                acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes[k] + i)));
        c += count_nonzero_block(acc);
    }
    for (; i < n; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += acc != 0;
    }
    return c;
}

void avx2_xor_u64(std::uint64_t* y, const std::uint64_t* d, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_xor_si256(a, b));
    }
    for (; i < nwords; ++i) y[i] ^= d[i];
}

// vpshufb nibble popcount, summed with vpsadbw.
inline __m256i popcount_epi8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t hsum_sad(__m256i bytes) {
    __m256i sad = _mm256_sad_epu8(bytes, _mm256_setzero_si256());
    return static_cast<std::size_t>(_mm256_extract_epi64(sad, 0)) +
           static_cast<std::size_t>(_mm256_extract_epi64(sad, 1)) +
           static_cast<std::size_t>(_mm256_extract_epi64(sad, 2)) +
           static_cast<std::size_t>(_mm256_extract_epi64(sad, 3));
}

std::size_t avx2_popcount_u64(const std::uint64_t* w, std::size_t nwords) {
    std::size_t c = 0, i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        c += hsum_sad(popcount_epi8(v));
    }
    for (; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

std::size_t avx2_popcount_or_u64(const std::uint64_t* const* planes,
                                 std::size_t nplanes, std::size_t nwords) {
    if (nplanes == 1) return avx2_popcount_u64(planes[0], nwords);
    std::size_t c = 0, i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes[0] + i));
        for (std::size_t k = 1; k < nplanes; ++k)
            acc = _mm256_or_si256(
                acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes[k] + i)));
        c += hsum_sad(popcount_epi8(acc));
    }
    for (; i < nwords; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < nplanes; ++k) acc |= planes[k][i];
        c += std::popcount(acc);
    }
    return c;
}

constexpr Ops kAvx2Ops = {
    "avx2",
    avx2_add_mod_p_u8,
    avx2_count_nonzero_u8,
    avx2_count_nonzero_any_u8,
    avx2_xor_u64,
    avx2_popcount_u64,
    avx2_popcount_or_u64,
};

} // namespace

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& avx2_ops_impl() { return kAvx2Ops; }

} // namespace bchmp::kernels

#endif // BCHMP_BUILD_AVX2
