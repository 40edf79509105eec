/**************************************************************************
 * cyclotomic.cpp
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

#include "bchmp/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bchmp/errors.hpp"

namespace bchmp::cyclotomic {

namespace {

constexpr std::uint64_t kMaxModulus = 1ull << 40;

void check_modulus(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    if (n == 0 || n > kMaxModulus)
        throw param_error("modulus " + std::to_string(n) + " out of supported range");
    if (q == 0) throw param_error("multiplier must be positive");
    if (std::gcd(q, n) != 1)
        throw param_error("multiplier " + std::to_string(q) + " not coprime to modulus " +
                          std::to_string(n));
    if (i >= n) throw param_error("representative " + std::to_string(i) +
                                  " outside [0, " + std::to_string(n) + ")");
}

std::uint64_t pow_u64_checked(std::uint64_t q, std::uint32_t m) {
    std::uint64_t v = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
        if (v > kMaxModulus / q)
            throw param_error("q^m exceeds the supported modulus range");
        v *= q;
    }
    return v;
}

} // namespace

Coset coset(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    check_modulus(i, q, n);
    Coset c;
    c.n = n;
    c.q = q;
    std::uint64_t j = i;
    do {
        c.elements.push_back(j);
        j = j * (q % n) % n;
    } while (j != i);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

std::uint64_t coset_leader(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    check_modulus(i, q, n);
    std::uint64_t lead = i, j = i;
    do {
        j = j * (q % n) % n;
        lead = std::min(lead, j);
    } while (j != i);
    return lead;
}

bool is_coset_leader(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    return coset_leader(i, q, n) == i;
}

QAdicDigits q_adic_expand(std::uint64_t i, std::uint64_t q, std::uint32_t m) {
    if (q < 2) throw param_error("q-adic base must be >= 2");
    std::uint64_t cap = pow_u64_checked(q, m);
    if (i >= cap)
        throw param_error("value " + std::to_string(i) + " does not fit in " +
                          std::to_string(m) + " base-" + std::to_string(q) + " digits");
    QAdicDigits d;
    d.q = q;
    d.digits.assign(m, 0);
    for (std::uint32_t k = m; k-- > 0;) {
        d.digits[k] = static_cast<std::uint32_t>(i % q);
        i /= q;
    }
    return d;
}

std::uint64_t q_adic_value(const QAdicDigits& d) {
    std::uint64_t v = 0;
    for (std::uint32_t dig : d.digits) v = v * d.q + dig;
    return v;
}

QAdicDigits circular_left_shift(const QAdicDigits& d, std::uint32_t j) {
    const std::uint32_t m = static_cast<std::uint32_t>(d.digits.size());
    if (m == 0 || j >= m)
        throw param_error("shift amount " + std::to_string(j) + " outside [0, m)");
    QAdicDigits r = d;
    std::rotate(r.digits.begin(), r.digits.begin() + j, r.digits.end());
    return r;
}

bool leader_at_least(std::uint64_t a, std::uint64_t b, std::uint64_t q,
                     std::uint32_t m) {
    const std::uint64_t cap = pow_u64_checked(q, m);
    if (a == 0 || a > cap - 1 || b == 0 || b > cap - 1)
        throw param_error("arguments must lie in (0, q^m - 1]");
    QAdicDigits da = q_adic_expand(a, q, m);
    for (std::uint32_t j = 0; j < m; ++j) {
        if (q_adic_value(circular_left_shift(da, j)) < b) return false;
    }
    return true;
}

bool leader_divisor_transfer(std::uint64_t t, std::uint64_t mu,
                             std::uint64_t q, std::uint32_t m) {
    const std::uint64_t n = pow_u64_checked(q, m) - 1;
    if (t == 0 || t >= n)
        throw param_error("t must lie in (0, q^m - 1)");
    if (mu == 0 || t % mu != 0 || n % mu != 0)
        throw param_error("mu must divide both t and q^m - 1");
    const bool lhs = is_coset_leader(t, q, n);
    const bool rhs = is_coset_leader(t / mu, q, n / mu);
    if (lhs != rhs)
        throw invariant_error("divisor-transfer equivalence violated at t=" +
                              std::to_string(t) + ", mu=" + std::to_string(mu));
    return lhs;
}

} // namespace bchmp::cyclotomic
