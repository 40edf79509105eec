/**************************************************************************
 * poly.cpp
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

#include "bchmp/poly.hpp"

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

namespace bchmp {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        throw param_error("polynomial operands belong to different fields");
}

} // namespace

Poly::Poly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (c >= f.order())
            throw param_error("coefficient " + std::to_string(c) + " outside GF(" +
                              std::to_string(f.order()) + ")");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, std::size_t k, Elem c) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::x_pow_minus_one(const Field& f, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = f.neg(1);
    v[n] = 1;
    return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*this, o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*this, o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*this, o);
    if (is_zero() || o.is_zero()) return zero(*f_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(*f_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    return f_ == o.f_ && c_ == o.c_;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Elem s = f_->inv(leading());
    std::vector<Elem> r(c_);
    for (Elem& c : r) c = f_->mul(c, s);
    return Poly(*f_, std::move(r));
}

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw param_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(f), a};
    std::vector<Elem> rem(a.c_);
    std::vector<Elem> quo(a.c_.size() - b.c_.size() + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    const std::size_t bs = b.c_.size();
    for (std::size_t idx = rem.size() - 1; idx + 1 >= bs; --idx) {
        Elem c = f.mul(rem[idx], lead_inv);
        if (c != 0) {
            std::size_t shift = idx + 1 - bs;
            quo[shift] = c;
            for (std::size_t j = 0; j < bs; ++j)
                rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b.c_[j]));
        }
        if (idx + 1 == bs) break;
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_lcm(const std::vector<Poly>& ps) {
    if (ps.empty()) throw param_error("lcm of an empty polynomial list");
    for (const Poly& p : ps)
        if (p.is_zero()) throw param_error("lcm with a zero polynomial");
    Poly acc = ps.front().monic();
    for (std::size_t i = 1; i < ps.size(); ++i) {
        Poly g = poly_gcd(acc, ps[i]);
        acc = (poly_divmod(acc * ps[i], g).first).monic();
    }
    return acc;
}

namespace {

// Embedding of GF(q) = GF(p^e0) into the ambient field GF(p^{e0*ell}):
// a deterministic root of GF(q)'s defining polynomial inside the ambient
// subfield of order q defines the isomorphism. Cached per field pair.
struct SubfieldMap {
    std::vector<Elem> embed;                  // base code -> ambient code
    std::unordered_map<Elem, Elem> project;   // ambient code -> base code
};

const SubfieldMap& subfield_map(const Field& base, const Field& amb) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, const Field*>, SubfieldMap> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&base, &amb);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::uint32_t q = base.order();
    const std::uint32_t p = base.characteristic();

    // Evaluate base's defining polynomial at ambient points of the subfield
    // {0} U <gamma>, gamma = alpha^((Q-1)/(q-1)); prime-field coefficients
    // embed as integer multiples of 1, i.e. the same code.
    const auto& mod = base.modulus();
    auto eval_mod = [&](Elem x) {
        Elem r = 0;
        for (std::size_t i = mod.size(); i-- > 0;)
            r = amb.add(amb.mul(r, x), mod[i] % p);
        return r;
    };
    Elem rho = 0;
    bool found = false;
    if (q == p) {
        rho = 1; // identity embedding of the prime field
        found = true;
    } else {
        const std::uint64_t cosub = (static_cast<std::uint64_t>(amb.order()) - 1) / (q - 1);
        Elem gamma = amb.pow(amb.generator(), cosub);
        Elem best = 0;
        Elem x = 1;
        for (std::uint32_t j = 0; j + 1 < q; ++j) {
            if (eval_mod(x) == 0 && (!found || x < best)) {
                best = x;
                found = true;
            }
            x = amb.mul(x, gamma);
        }
        rho = best;
    }
    if (!found)
        throw invariant_error("subfield embedding root not found");

    SubfieldMap m;
    m.embed.resize(q);
    for (Elem c = 0; c < q; ++c) {
        // digits of c base p are the coordinates over the prime field
        Elem v = 0, rp = 1, cc = c;
        while (cc) {
            v = amb.add(v, amb.mul(cc % p, rp));
            cc /= p;
            rp = amb.mul(rp, rho);
        }
        m.embed[c] = v;
        m.project.emplace(v, c);
    }
    return cache.emplace(key, std::move(m)).first->second;
}

} // namespace

Poly minimal_polynomial(std::uint64_t i, std::uint64_t n, std::uint64_t q,
                        std::uint32_t ell) {
    std::uint32_t p = 0, e0 = 0;
    prime_power_decompose(q, p, e0);
    const Field& base = Field::get(p, e0);
    const Field& amb = Field::get(p, e0 * ell);

    std::uint64_t group = amb.order() - 1;
    if (n == 0 || group % n != 0)
        throw param_error("length " + std::to_string(n) + " does not divide " +
                          std::to_string(q) + "^" + std::to_string(ell) + " - 1");
    if (i >= n) throw param_error("exponent out of range [0, n)");

    const Elem beta = amb.pow(amb.generator(), group / n);

    // orbit of i under multiplication by q mod n
    std::vector<std::uint64_t> orbit;
    std::uint64_t j = i;
    do {
        orbit.push_back(j);
        j = j * q % n;
    } while (j != i);

    Poly m = Poly::constant(amb, 1);
    for (std::uint64_t k : orbit) {
        Elem root = amb.pow(beta, k);
        m = m * Poly(amb, {amb.neg(root), 1});
    }

    const SubfieldMap& sm = subfield_map(base, amb);
    std::vector<Elem> proj(m.coeffs().size());
    for (std::size_t t = 0; t < proj.size(); ++t) {
        auto it = sm.project.find(m.coeffs()[t]);
        if (it == sm.project.end())
            throw invariant_error("minimal polynomial coefficient escaped the base subfield");
        proj[t] = it->second;
    }
    return Poly(base, std::move(proj));
}

} // namespace bchmp
