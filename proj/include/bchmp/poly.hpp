/**************************************************************************
 * poly.hpp
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
#include <utility>
#include <vector>

#include "bchmp/gf.hpp"

namespace bchmp {

/**
 * Univariate polynomial over a Field. Coefficients are stored low-degree
 * first with no trailing zeros; the zero polynomial has an empty
 * coefficient vector.
 */
class Poly {
public:
    Poly() : f_(nullptr) {}
    Poly(const Field& f, std::vector<Elem> coeffs);

    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
    /// x^k with unit coefficient
    static Poly monomial(const Field& f, std::size_t k, Elem c = 1);
    /// x^n - 1
    static Poly x_pow_minus_one(const Field& f, std::size_t n);

    const Field& field() const { return *f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;

    Poly monic() const;
    Elem eval(Elem x) const;

private:
    const Field* f_;
    std::vector<Elem> c_;

    void normalize();
    friend std::pair<Poly, Poly> poly_divmod(const Poly&, const Poly&);
};

/// Euclidean division: a = q*b + r with deg r < deg b.
/// Throws param_error for b = 0 or mismatched fields.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

Poly poly_gcd(const Poly& a, const Poly& b); ///< monic gcd

/// Monic least common multiple via repeated gcd.
/// Throws param_error for an empty list or a zero polynomial.
Poly poly_lcm(const std::vector<Poly>& ps);

/**
 * Minimal polynomial of beta^i over GF(q), where beta = alpha^((q^ell-1)/n)
 * and alpha is the canonical primitive element of GF(q^ell).
 *
 * Requires n | q^ell - 1 and 0 <= i < n. The product over the q-cyclotomic
 * coset of i is computed in the extension field and the coefficients are
 * projected onto GF(q); a projection failure is an invariant_error.
 */
Poly minimal_polynomial(std::uint64_t i, std::uint64_t n, std::uint64_t q,
                        std::uint32_t ell);

} // namespace bchmp
