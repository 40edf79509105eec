/**************************************************************************
 * bch.hpp
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

#include "bchmp/codes.hpp"
#include "bchmp/poly.hpp"

namespace bchmp {

/**
 * Defining set of a cyclic code of length n over GF(q): a union of
 * q-cyclotomic cosets modulo n, kept sorted. m = ord_n(q).
 */
struct DefiningSet {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::vector<std::uint64_t> elements; ///< sorted, coset-closed

    bool contains(std::uint64_t i) const;
};

/// Multiplicative order of q modulo n. Requires gcd(q, n) = 1; iteration
/// capped at 10^6 steps.
std::uint32_t ord_mod(std::uint64_t q, std::uint64_t n);

/// Validates closure under i -> i*q (mod n) and builds the set.
DefiningSet make_defining_set(std::uint64_t n, std::uint64_t q,
                              std::vector<std::uint64_t> elements);

/// Union of the cosets of b, b+1, ..., b+delta-2 (indices mod n).
/// Requires gcd(n, q) = 1 and 2 <= delta <= n.
DefiningSet bch_defining_set(std::uint64_t n, std::uint64_t q,
                             std::uint64_t delta, std::uint64_t b = 1);

/// T^perp = Z_n \ T^{-1} (Euclidean) or Z_n \ T^{-q0} (Hermitian,
/// q0 = sqrt(q), requiring q to be a square).
DefiningSet dual_defining_set(const DefiningSet& t, Inner inner);

/// 1 + length of the longest run of cyclically consecutive integers in t.
/// Empty set gives 1; the full set gives n + 1 (no nonzero codewords).
std::uint64_t bch_bound(const DefiningSet& t);

/// Largest delta for which the narrow-sense BCH code of length n over
/// GF(q) is guaranteed dual-containing:
/// floor( n/(q^m-1) * (q^ceil(m/2) - 1 - (q-2)[m odd]) ).
std::uint64_t aly_dual_containing_max_delta(std::uint64_t n, std::uint64_t q,
                                            std::uint32_t m);

struct BCHSpec {
    std::uint64_t n = 0, q = 0, delta = 0, b = 1;
    DefiningSet defining_set;
    Poly generator;               ///< over GF(q), monic, divides x^n - 1
    std::uint64_t dimension = 0;  ///< n - |T|
};

/// Builds the generator polynomial lcm(m_b, ..., m_{b+delta-2}).
/// Needs the ambient field GF(q^m), so q^m must stay within the field-order
/// cap; use bch_defining_set alone for defining-set-level work.
BCHSpec bch_code(std::uint64_t n, std::uint64_t q, std::uint64_t delta,
                 std::uint64_t b = 1);

/// Generator polynomial of the cyclic code with the given defining set
/// (product of the minimal polynomials of its coset leaders).
Poly generator_from_defining_set(const DefiningSet& t);

/// k x n matrix of cyclic shifts of g, canonicalized.
LinearCode cyclic_code(const Field& base, std::uint64_t n, const Poly& g);

/// Convenience: cyclic_code of the spec's generator.
LinearCode bch_matrix(const BCHSpec& spec);

} // namespace bchmp
