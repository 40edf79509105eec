/**************************************************************************
 * bch.cpp
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

#include "bchmp/bch.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bchmp/cyclotomic.hpp"

namespace bchmp {

bool DefiningSet::contains(std::uint64_t i) const {
    return std::binary_search(elements.begin(), elements.end(), i);
}

std::uint32_t ord_mod(std::uint64_t q, std::uint64_t n) {
    if (n < 2) throw param_error("ord_n(q) needs n >= 2");
    if (std::gcd(q, n) != 1)
        throw param_error("ord undefined: gcd(" + std::to_string(q) + ", " +
                          std::to_string(n) + ") != 1");
    std::uint64_t v = q % n;
    for (std::uint32_t m = 1; m <= 1000000; ++m) {
        if (v == 1) return m;
        v = v * (q % n) % n;
    }
    throw param_error("ord_n(q) exceeds the iteration cap");
}

DefiningSet make_defining_set(std::uint64_t n, std::uint64_t q,
                              std::vector<std::uint64_t> elements) {
    DefiningSet t;
    t.n = n;
    t.q = q;
    t.m = ord_mod(q, n);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (std::uint64_t i : elements) {
        if (i >= n) throw param_error("defining-set element outside Z_n");
    }
    t.elements = std::move(elements);
    for (std::uint64_t i : t.elements) {
        if (!t.contains(i * (q % n) % n))
            throw param_error("defining set not closed under multiplication by q");
    }
    return t;
}

DefiningSet bch_defining_set(std::uint64_t n, std::uint64_t q,
                             std::uint64_t delta, std::uint64_t b) {
    if (n < 2) throw param_error("code length must be >= 2");
    if (std::gcd(n, q) != 1)
        throw param_error("gcd(n, q) must be 1");
    if (delta < 2 || delta > n)
        throw param_error("designed distance " + std::to_string(delta) +
                          " outside [2, n]");
    std::set<std::uint64_t> acc;
    for (std::uint64_t i = b; i + 1 <= b + delta - 1; ++i) {
        auto cs = cyclotomic::coset(i % n, q % n, n);
        acc.insert(cs.elements.begin(), cs.elements.end());
    }
    DefiningSet t;
    t.n = n;
    t.q = q;
    t.m = ord_mod(q, n);
    t.elements.assign(acc.begin(), acc.end());
    return t;
}

DefiningSet dual_defining_set(const DefiningSet& t, Inner inner) {
    std::uint64_t mult = 1;
    if (inner == Inner::hermitian) {
        // q0 = sqrt(q); the field order must be a square
        std::uint64_t q0 = 0;
        while ((q0 + 1) * (q0 + 1) <= t.q) ++q0;
        if (q0 * q0 != t.q)
            throw param_error("hermitian dual needs a square field order, got " +
                              std::to_string(t.q));
        mult = q0;
    }
    std::vector<bool> excluded(t.n, false);
    for (std::uint64_t i : t.elements) {
        std::uint64_t image = (t.n - mult * i % t.n) % t.n;
        excluded[image] = true;
    }
    DefiningSet d;
    d.n = t.n;
    d.q = t.q;
    d.m = t.m;
    for (std::uint64_t i = 0; i < t.n; ++i)
        if (!excluded[i]) d.elements.push_back(i);
    return d;
}

std::uint64_t bch_bound(const DefiningSet& t) {
    const std::uint64_t n = t.n;
    if (t.elements.empty()) return 1;
    if (t.elements.size() == n) return n + 1;
    // longest run of consecutive residues, cyclically
    std::uint64_t longest = 0, run = 1;
    for (std::size_t i = 1; i < t.elements.size(); ++i) {
        if (t.elements[i] == t.elements[i - 1] + 1) {
            ++run;
        } else {
            longest = std::max(longest, run);
            run = 1;
        }
    }
    longest = std::max(longest, run);
    // wrap-around n-1 -> 0
    if (t.elements.front() == 0 && t.elements.back() == n - 1) {
        std::uint64_t head = 1;
        while (head < t.elements.size() && t.elements[head] == t.elements[head - 1] + 1)
            ++head;
        std::uint64_t tail = 1;
        while (tail < t.elements.size() &&
               t.elements[t.elements.size() - tail - 1] + 1 ==
                   t.elements[t.elements.size() - tail])
            ++tail;
        longest = std::max(longest, head + tail);
    }
    return longest + 1;
}

std::uint64_t aly_dual_containing_max_delta(std::uint64_t n, std::uint64_t q,
                                            std::uint32_t m) {
    if (m != ord_mod(q, n))
        throw param_error("m must equal ord_n(q)");
    std::uint64_t qm = 1;
    for (std::uint32_t i = 0; i < m; ++i) qm *= q;
    std::uint64_t qhalf = 1;
    for (std::uint32_t i = 0; i < (m + 1) / 2; ++i) qhalf *= q;
    const std::uint64_t bracket = qhalf - 1 - (m % 2 == 1 ? q - 2 : 0);
    return n * bracket / (qm - 1);
}

BCHSpec bch_code(std::uint64_t n, std::uint64_t q, std::uint64_t delta,
                 std::uint64_t b) {
    BCHSpec spec;
    spec.n = n;
    spec.q = q;
    spec.delta = delta;
    spec.b = b;
    spec.defining_set = bch_defining_set(n, q, delta, b);

    const std::uint32_t m = spec.defining_set.m;
    std::vector<Poly> mins;
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = b; i + 1 <= b + delta - 1; ++i) {
        std::uint64_t leader = cyclotomic::coset_leader(i % n, q % n, n);
        if (seen.insert(leader).second)
            mins.push_back(minimal_polynomial(leader, n, q, m));
    }
    spec.generator = poly_lcm(mins);
    if (spec.generator.degree() != static_cast<int>(spec.defining_set.elements.size()))
        throw invariant_error("generator degree differs from |T|");
    spec.dimension = n - spec.defining_set.elements.size();
    return spec;
}

Poly generator_from_defining_set(const DefiningSet& t) {
    if (t.elements.empty()) {
        std::uint32_t p = 0, e = 0;
        prime_power_decompose(t.q, p, e);
        return Poly::constant(Field::get(p, e), 1);
    }
    std::vector<Poly> mins;
    std::set<std::uint64_t> seen;
    for (std::uint64_t i : t.elements) {
        std::uint64_t leader = cyclotomic::coset_leader(i, t.q % t.n, t.n);
        if (seen.insert(leader).second)
            mins.push_back(minimal_polynomial(leader, t.n, t.q, t.m));
    }
    return poly_lcm(mins);
}

LinearCode cyclic_code(const Field& base, std::uint64_t n, const Poly& g) {
    if (g.is_zero() || g.degree() > static_cast<int>(n))
        throw param_error("generator polynomial degree out of range");
    auto rem = poly_divmod(Poly::x_pow_minus_one(base, n), g).second;
    if (!rem.is_zero())
        throw param_error("generator polynomial does not divide x^n - 1");
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            rows[i][i + j] = g.coeffs()[j];
    return LinearCode(base, n, std::move(rows));
}

LinearCode bch_matrix(const BCHSpec& spec) {
    return cyclic_code(spec.generator.field(), spec.n, spec.generator);
}

} // namespace bchmp
