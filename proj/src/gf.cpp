/**************************************************************************
 * gf.cpp
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

#include "bchmp/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace bchmp {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;
constexpr std::uint32_t kLogTableMaxOrder = 1u << 16;
constexpr std::uint32_t kAddTableMaxOrder = 1024;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Digit vector (low-to-high, base p) of an integer code.
std::vector<std::uint32_t> to_digits(std::uint64_t v, std::uint32_t p, std::uint32_t len) {
    std::vector<std::uint32_t> d(len, 0);
    for (std::uint32_t i = 0; i < len && v; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

// Polynomial arithmetic over GF(p) on digit vectors, used only during field
// construction (before any tables exist).
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce modulo the monic polynomial `mod`
    const std::size_t m = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > m;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            r[i - m + j] = (r[i - m + j] + (p - 1) * c % p * mod[j]) % p;
    }
    r.resize(m);
    ptrim(r);
    return r;
}

PVec ppowmod(PVec base, std::uint64_t k, const PVec& mod, std::uint32_t p) {
    PVec r{1};
    while (k) {
        if (k & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        k >>= 1;
    }
    return r;
}

// f is monic of degree e with f(0) != 0. Tests whether the class of x has
// multiplicative order exactly p^e - 1 in GF(p)[x]/(f); when it does, f is
// both irreducible and primitive (a reducible modulus has a strictly smaller
// unit group).
bool is_primitive_modulus(const PVec& f, std::uint32_t p,
                          const std::vector<std::uint64_t>& prime_factors,
                          std::uint64_t group_order) {
    if (f[0] == 0) return false;
    const PVec x{0, 1};
    PVec one{1};
    if (ppowmod(x, group_order, f, p) != one) return false;
    for (std::uint64_t r : prime_factors) {
        if (ppowmod(x, group_order / r, f, p) == one) return false;
    }
    return true;
}

std::uint64_t code_of(const PVec& digits, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
    return v;
}

} // namespace

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

void prime_power_decompose(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) throw param_error("prime power expected, got " + std::to_string(q));
    auto fs = distinct_prime_factors(q);
    if (fs.size() != 1)
        throw param_error(std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(fs[0]);
    e = 0;
    while (q > 1) {
        q /= p;
        ++e;
    }
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p))
        throw param_error("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw param_error("extension degree must be >= 1");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        order *= p;
        if (order > kMaxOrder)
            throw param_error("field order " + std::to_string(p) + "^" +
                              std::to_string(e) + " exceeds the supported maximum 2^20");
    }
    order_ = static_cast<std::uint32_t>(order);

    // Exhaustive lexicographic search for the defining polynomial: the monic
    // degree-e polynomial x^e + (digits of c) with the smallest c whose root
    // generates the multiplicative group.
    const std::uint64_t group_order = order - 1;
    const auto prime_factors = distinct_prime_factors(group_order);
    bool found = false;
    for (std::uint64_t c = 0; c < order; ++c) {
        PVec f = to_digits(c, p, e);
        f.resize(e + 1);
        f[e] = 1;
        if (is_primitive_modulus(f, p, prime_factors, group_order)) {
            modulus_ = f;
            found = true;
            break;
        }
    }
    if (!found)
        throw invariant_error("no primitive polynomial found for GF(" +
                              std::to_string(p) + "^" + std::to_string(e) + ")");

    generator_ = (e == 1) ? static_cast<Elem>((p - modulus_[0]) % p)
                          : static_cast<Elem>(p); // the class of x

    if (order_ <= kLogTableMaxOrder && order_ > 2) {
        exp_.resize(2 * group_order);
        log_.assign(order_, 0);
        Elem v = 1;
        for (std::uint64_t i = 0; i < group_order; ++i) {
            exp_[i] = v;
            exp_[i + group_order] = v;
            log_[v] = static_cast<std::uint16_t>(i);
            v = mul_nocache(v, generator_);
        }
        if (v != 1)
            throw invariant_error("generator order mismatch while building tables");
    }
    if (order_ <= kAddTableMaxOrder) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] = add_nocache(a, b);
    }
}

const Field& Field::get(std::uint32_t p, std::uint32_t e) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
    return *it->second;
}

Elem Field::add_nocache(Elem a, Elem b) const {
    if (e_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem r = 0, mult = 1;
    while (a || b) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const {
    if (!add_table_.empty())
        return add_table_[static_cast<std::size_t>(a) * order_ + b];
    return add_nocache(a, b);
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0, mult = 1;
    while (a) {
        Elem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_nocache(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    PVec pa = to_digits(a, p_, e_), pb = to_digits(b, p_, e_);
    ptrim(pa);
    ptrim(pb);
    return static_cast<Elem>(code_of(pmulmod(pa, pb, modulus_, p_), p_));
}

Elem Field::mul(Elem a, Elem b) const {
    if (!exp_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::uint32_t>(log_[a]) + log_[b]];
    }
    return mul_nocache(a, b);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (!exp_.empty()) {
        const std::uint64_t g = order_ - 1;
        return exp_[static_cast<std::uint64_t>(log_[a]) * (k % g) % g];
    }
    Elem r = 1;
    k %= order_ - 1; // a != 0, so a^(order-1) = 1
    if (k == 0) return 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw param_error("division by zero field element");
    if (!exp_.empty()) {
        const std::uint32_t g = order_ - 1;
        return exp_[(g - log_[a]) % g];
    }
    return pow(a, order_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::frobenius(Elem x, std::uint32_t q0) const {
    std::uint64_t t = q0;
    if (t < 2 || t % p_ != 0)
        throw param_error("frobenius: " + std::to_string(q0) + " is not a power of the characteristic");
    std::uint32_t j = 0;
    while (t > 1) {
        if (t % p_ != 0)
            throw param_error("frobenius: " + std::to_string(q0) + " is not a power of the characteristic");
        t /= p_;
        ++j;
    }
    if (j > e_)
        throw param_error("frobenius: subfield order exceeds the field order");
    return pow(x, q0);
}

std::uint64_t Field::element_order(Elem a) const {
    if (a == 0) throw param_error("zero element has no multiplicative order");
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t r : distinct_prime_factors(order_ - 1)) {
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

} // namespace bchmp
