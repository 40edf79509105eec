/**************************************************************************
 * gf.hpp
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

#include "bchmp/errors.hpp"

namespace bchmp {

/// Element of a finite field, encoded as an integer in [0, p^e).
/// The base-p digits of the code are the coefficients of the element's
/// polynomial representation, least significant digit = constant term.
using Elem = std::uint32_t;

/**
 * Exact arithmetic in GF(p^e) for prime p and p^e <= 2^20.
 *
 * The defining polynomial is the lexicographically smallest primitive monic
 * polynomial of degree e over GF(p), where polynomials are ordered by the
 * integer value of their coefficient vector (low-to-high digits, base p).
 * The search is exhaustive and self-contained, so the representation is
 * deterministic across runs but may differ from computer-algebra systems
 * that use Conway polynomials.
 *
 * Fields are interned: Field::get(p, e) returns a reference to a unique
 * immutable instance. All operations are pure and safe for unrestricted
 * concurrent use.
 */
class Field {
public:
    /// Interned accessor. Throws param_error for non-prime p, e = 0, or
    /// p^e > 2^20.
    static const Field& get(std::uint32_t p, std::uint32_t e);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t order() const { return order_; }

    /// Defining polynomial digits, low-to-high, length e+1, leading digit 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Canonical primitive element: the root "x" of the defining polynomial
    /// (for e = 1, the residue -c where the polynomial is x + c).
    Elem generator() const { return generator_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; ///< throws param_error on a = 0
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t k) const;

    /// x -> x^q0 where q0 = p^j, 1 <= j <= e. Throws param_error otherwise.
    Elem frobenius(Elem x, std::uint32_t q0) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem a) const;

    bool operator==(const Field& other) const { return this == &other; }

private:
    Field(std::uint32_t p, std::uint32_t e);

    Elem add_nocache(Elem a, Elem b) const;
    Elem mul_nocache(Elem a, Elem b) const;

    std::uint32_t p_, e_, order_;
    std::vector<std::uint32_t> modulus_;
    Elem generator_ = 0;

    // log/antilog cache for orders <= 2^16; the minimum-distance oracle is
    // multiplication-bound.
    std::vector<std::uint16_t> log_;
    std::vector<Elem> exp_;
    // full addition table for small orders
    std::vector<Elem> add_table_;
};

/// Prime factors of n, each listed once, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Decompose a prime power q = p^e. Throws param_error if q is not a
/// prime power (> 1).
void prime_power_decompose(std::uint64_t q, std::uint32_t& p, std::uint32_t& e);

} // namespace bchmp
