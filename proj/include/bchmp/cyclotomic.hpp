/**************************************************************************
 * cyclotomic.hpp
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

#include <cstdint>
#include <vector>

namespace bchmp::cyclotomic {

/// Orbit of i under multiplication by q modulo n, with its minimum.
struct Coset {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t leader = 0;                ///< min of elements
    std::vector<std::uint64_t> elements;     ///< sorted ascending
};

/// q-adic digits of an integer, most significant digit first, fixed width m.
struct QAdicDigits {
    std::uint64_t q = 0;
    std::vector<std::uint32_t> digits; ///< size m, entries in [0, q)
};

/// Full cyclotomic coset of i mod n. Requires gcd(q, n) = 1 and 0 <= i < n.
Coset coset(std::uint64_t i, std::uint64_t q, std::uint64_t n);

/// Minimum of the orbit of i under multiplication by q mod n.
std::uint64_t coset_leader(std::uint64_t i, std::uint64_t q, std::uint64_t n);

bool is_coset_leader(std::uint64_t i, std::uint64_t q, std::uint64_t n);

/// Requires 0 <= i < q^m.
QAdicDigits q_adic_expand(std::uint64_t i, std::uint64_t q, std::uint32_t m);

std::uint64_t q_adic_value(const QAdicDigits& d);

/// Rotate digits left by j (0 <= j <= m-1). Equivalent to multiplying the
/// value by q^j modulo q^m - 1 for values other than q^m - 1 itself.
QAdicDigits circular_left_shift(const QAdicDigits& d, std::uint32_t j);

/**
 * Shift criterion for coset-leader comparison modulo q^m - 1: true iff
 * every circular left shift of a's digit vector, read as an integer, is
 * >= b. For 0 < a < q^m - 1 this is equivalent to
 * coset_leader(a, q, q^m - 1) >= b. Requires 0 < a, b <= q^m - 1.
 */
bool leader_at_least(std::uint64_t a, std::uint64_t b, std::uint64_t q,
                     std::uint32_t m);

/**
 * Divisor-transfer equivalence: for mu | t and mu | q^m - 1, t is a coset
 * leader modulo q^m - 1 iff t/mu is one modulo (q^m - 1)/mu. Both sides are
 * computed; a disagreement raises invariant_error. Returns the common value.
 * Requires 0 < t < q^m - 1.
 */
bool leader_divisor_transfer(std::uint64_t t, std::uint64_t mu,
                             std::uint64_t q, std::uint32_t m);

} // namespace bchmp::cyclotomic
