/**************************************************************************
 * bounds.cpp
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

#include "bchmp/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "bchmp/bch.hpp"
#include "bchmp/cyclotomic.hpp"

namespace bchmp::bounds {

namespace {

std::int64_t ipow(std::int64_t q, std::int64_t e) {
    if (q < 2 || e < 0) throw param_error("bad power arguments");
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (v > (std::int64_t{1} << 60) / q)
            throw param_error("power exceeds the supported integer range");
        v *= q;
    }
    return v;
}

// x >= sqrt(y) and x > sqrt(y) for nonnegative y, exact in integers.
bool ge_sqrt(std::int64_t x, std::int64_t y) { return x >= 0 && x * x >= y; }
bool gt_sqrt(std::int64_t x, std::int64_t y) { return x >= 0 && x * x > y; }

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    return distinct_prime_factors(static_cast<std::uint64_t>(q)).size() == 1;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw param_error(what);
}

std::int64_t get_param(const std::map<std::string, std::int64_t>& params,
                       const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw param_error("missing parameter '" + key + "'");
    return it->second;
}

struct CaseMatch {
    std::int64_t bound;
    std::string label;
};

void keep_best(std::vector<CaseMatch>& ms, std::int64_t bound, std::string label) {
    ms.push_back({bound, std::move(label)});
}

std::string join_matches(const std::vector<CaseMatch>& ms) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) os << "; ";
        os << ms[i].label << " -> " << ms[i].bound;
    }
    return os.str();
}

} // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::thm1: return "thm1";
        case TheoremId::thm2: return "thm2";
        case TheoremId::lem5: return "lem5";
        case TheoremId::lem6: return "lem6";
        case TheoremId::thm3: return "thm3";
        case TheoremId::thm4: return "thm4";
        case TheoremId::remark_binary: return "remark_binary";
        case TheoremId::thm5: return "thm5";
        case TheoremId::fu24_thm16: return "fu24_thm16";
        case TheoremId::thm6: return "thm6";
        case TheoremId::thm7: return "thm7";
        case TheoremId::thm8: return "thm8";
        case TheoremId::thm9: return "thm9";
        case TheoremId::lem_prior_19190: return "lem_prior_19190";
        case TheoremId::lem_prior_19: return "lem_prior_19";
    }
    return "?";
}

TheoremId theorem_from_name(const std::string& name) {
    static const std::map<std::string, TheoremId> m = {
        {"thm1", TheoremId::thm1},
        {"thm2", TheoremId::thm2},
        {"lem5", TheoremId::lem5},
        {"lem6", TheoremId::lem6},
        {"thm3", TheoremId::thm3},
        {"thm4", TheoremId::thm4},
        {"remark_binary", TheoremId::remark_binary},
        {"thm5", TheoremId::thm5},
        {"fu24_thm16", TheoremId::fu24_thm16},
        {"thm6", TheoremId::thm6},
        {"thm7", TheoremId::thm7},
        {"thm8", TheoremId::thm8},
        {"thm9", TheoremId::thm9},
        {"lem_prior_19190", TheoremId::lem_prior_19190},
        {"lem_prior_19", TheoremId::lem_prior_19},
    };
    auto it = m.find(name);
    if (it == m.end()) throw param_error("unknown bound id '" + name + "'");
    return it->second;
}

const char* bound_class_name(BoundClass c) {
    switch (c) {
        case BoundClass::square_root: return "square_root";
        case BoundClass::square_root_like: return "square_root_like";
        case BoundClass::coset_leader: return "coset_leader";
        case BoundClass::dual_distance: return "dual_distance";
    }
    return "?";
}

const char* status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::verified_exact: return "verified_exact";
        case VerifyStatus::verified_bound: return "verified_bound";
        case VerifyStatus::inconclusive: return "inconclusive";
        case VerifyStatus::refuted: return "REFUTED";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// New dual-distance bounds (sections behind tables 1 and 2)
// ---------------------------------------------------------------------------

BoundClaim theorem1_claim(std::int64_t q, std::int64_t s, std::int64_t m,
                          std::int64_t t, std::int64_t delta) {
    require(is_prime_power(q) && q != 2, "thm1 needs a prime power q != 2");
    require(s >= 1 && m >= 1 && m % s == 0, "thm1 needs s | m");
    require(t >= 2 && t <= m / s - 1, "thm1 needs 2 <= t <= m/s - 1");
    const std::int64_t qs = ipow(q, s);
    const std::int64_t lower = (ipow(q, s * t) - 1) / (qs - 1);
    const std::int64_t upper = lower + ipow(q, t - 1);
    require(delta > lower && delta <= upper,
            "thm1 needs (q^{st}-1)/(q^s-1) < delta <= ... + q^{t-1}");
    BoundClaim c;
    c.id = TheoremId::thm1;
    c.cls = BoundClass::dual_distance;
    c.params = {{"q", q}, {"s", s}, {"m", m}, {"t", t}, {"delta", delta}};
    c.params["n"] = (ipow(q, m) - 1) / (qs - 1);
    c.claimed_bound = ipow(q, m - s * t);
    return c;
}

BoundClaim theorem2_claim(std::int64_t q, std::int64_t m, std::int64_t t,
                          std::int64_t delta) {
    require(is_prime_power(q), "thm2 needs a prime power q");
    require(m >= 3 && t >= 2 && t <= m - 1, "thm2 needs 2 <= t <= m - 1");
    const std::int64_t Q = q * q;
    const std::int64_t lower = (ipow(Q, t) - 1) / (Q - 1);
    const std::int64_t upper = lower + ipow(q, t - 1);
    require(delta > lower && delta <= upper,
            "thm2 needs (Q^t-1)/(Q-1) < delta <= ... + q^{t-1}");
    BoundClaim c;
    c.id = TheoremId::thm2;
    c.cls = BoundClass::dual_distance;
    c.params = {{"q", q}, {"Q", Q}, {"m", m}, {"t", t}, {"delta", delta}};
    c.params["n"] = (ipow(Q, m) - 1) / (Q - 1);
    c.claimed_bound = ipow(Q, m - t) + 1;
    c.params["table_bound"] = ipow(Q, m - t);
    return c;
}

// ---------------------------------------------------------------------------
// Coset-leader lemmas
// ---------------------------------------------------------------------------

namespace {

struct LeaderCheck {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
    std::uint64_t multiplier = 0;
    std::uint64_t leader = 0;
    std::int64_t threshold = 0;
    bool ok = false;
};

void lemma5_validate(std::int64_t q, std::int64_t s, std::int64_t t, std::int64_t m) {
    require(is_prime_power(q) && q != 2, "lemma 5 needs a prime power q != 2");
    require(s >= 1 && m >= 1 && m % s == 0, "lemma 5 needs s | m");
    require(t >= 2 && t <= m / s - 1, "lemma 5 needs 2 <= t <= m/s - 1");
}

void lemma6_validate(std::int64_t q, std::int64_t m, std::int64_t t) {
    require(is_prime_power(q), "lemma 6 needs a prime power q");
    require(m >= 2 && t >= 2 && t <= m - 1, "lemma 6 needs 2 <= t <= m - 1");
}

LeaderCheck lemma5_compute(std::int64_t q, std::int64_t s, std::int64_t t,
                           std::int64_t m, std::int64_t u) {
    const std::int64_t umax = ipow(q, m - s * t) - 1;
    require(u >= 1 && u <= umax, "lemma 5 needs 1 <= u <= q^{m-st} - 1");
    LeaderCheck c;
    c.value = static_cast<std::uint64_t>(ipow(q, m) - 2 * ipow(q, m - s * t + s) +
                                         ipow(q, m - s * t) + u * (ipow(q, s) - 1));
    c.modulus = static_cast<std::uint64_t>(ipow(q, m) - 1);
    c.multiplier = static_cast<std::uint64_t>(q);
    c.threshold = ipow(q, s * t) + ipow(q, s + t - 1) - ipow(q, t - 1) - 1;
    c.leader = cyclotomic::coset_leader(c.value % c.modulus, c.multiplier % c.modulus,
                                        c.modulus);
    c.ok = c.leader > static_cast<std::uint64_t>(c.threshold);
    return c;
}

LeaderCheck lemma6_compute(std::int64_t q, std::int64_t m, std::int64_t t,
                           std::int64_t u) {
    const std::int64_t Q = q * q;
    const std::int64_t umax = ipow(Q, m - t);
    require(u >= 0 && u <= umax, "lemma 6 needs 0 <= u <= Q^{m-t}");
    LeaderCheck c;
    c.value = static_cast<std::uint64_t>(ipow(Q, m) - 2 * ipow(Q, m - t + 1) * q +
                                         ipow(Q, m - t) * q + u * (Q - 1) * q + q - 1);
    c.modulus = static_cast<std::uint64_t>(ipow(Q, m) - 1);
    c.multiplier = static_cast<std::uint64_t>(Q);
    c.threshold = ipow(Q, t) + Q * ipow(q, t - 1) - ipow(q, t - 1) - 1;
    c.leader = cyclotomic::coset_leader(c.value % c.modulus, c.multiplier % c.modulus,
                                        c.modulus);
    c.ok = c.leader > static_cast<std::uint64_t>(c.threshold);
    return c;
}

BoundReport leader_report(TheoremId id, std::map<std::string, std::int64_t> params,
                          const LeaderCheck& c) {
    BoundReport r;
    r.claim.id = id;
    r.claim.cls = BoundClass::coset_leader;
    r.claim.params = std::move(params);
    r.claim.claimed_bound = c.threshold;
    std::ostringstream ev;
    ev << "coset " << c.value << " mod " << c.modulus << " (multiplier " << c.multiplier
       << ") has leader " << c.leader << "; threshold " << c.threshold;
    if (c.ok) {
        r.status = VerifyStatus::verified_exact;
    } else {
        r.status = VerifyStatus::refuted;
        ev << "; WITNESS: leader " << c.leader << " <= " << c.threshold;
    }
    r.evidence = ev.str();
    return r;
}

template <class Check>
BoundReport sweep_report(TheoremId id, std::map<std::string, std::int64_t> params,
                         std::int64_t u_lo, std::int64_t u_hi, Check check) {
    std::uint64_t checked = 0;
    std::uint64_t min_leader = ~0ull;
    std::int64_t threshold = 0;
    std::vector<std::int64_t> failures;
    for (std::int64_t u = u_lo; u <= u_hi; ++u) {
        const LeaderCheck c = check(u);
        threshold = c.threshold;
        ++checked;
        min_leader = std::min(min_leader, c.leader);
        if (!c.ok) failures.push_back(u);
    }
    BoundReport agg;
    agg.claim.id = id;
    agg.claim.cls = BoundClass::coset_leader;
    agg.claim.params = std::move(params);
    agg.claim.claimed_bound = threshold;
    std::ostringstream ev;
    ev << "swept u in [" << u_lo << ", " << u_hi << "]: " << checked
       << " cosets, min leader " << min_leader << ", threshold " << threshold;
    if (failures.empty()) {
        agg.status = VerifyStatus::verified_exact;
    } else {
        agg.status = VerifyStatus::refuted;
        ev << "; WITNESS u = " << failures.front();
    }
    agg.evidence = ev.str();
    return agg;
}

} // namespace

BoundReport lemma5_threshold_check(std::int64_t q, std::int64_t s, std::int64_t t,
                                   std::int64_t m, std::int64_t u) {
    lemma5_validate(q, s, t, m);
    return leader_report(TheoremId::lem5,
                         {{"q", q}, {"s", s}, {"t", t}, {"m", m}, {"u", u}},
                         lemma5_compute(q, s, t, m, u));
}

BoundReport lemma6_threshold_check(std::int64_t q, std::int64_t m, std::int64_t t,
                                   std::int64_t u) {
    lemma6_validate(q, m, t);
    return leader_report(TheoremId::lem6,
                         {{"q", q}, {"Q", q * q}, {"m", m}, {"t", t}, {"u", u}},
                         lemma6_compute(q, m, t, u));
}

BoundReport lemma5_sweep(std::int64_t q, std::int64_t s, std::int64_t t,
                         std::int64_t m) {
    lemma5_validate(q, s, t, m);
    const std::int64_t umax = ipow(q, m - s * t) - 1;
    return sweep_report(
        TheoremId::lem5, {{"q", q}, {"s", s}, {"t", t}, {"m", m}}, 1, umax,
        [&](std::int64_t u) { return lemma5_compute(q, s, t, m, u); });
}

BoundReport lemma6_sweep(std::int64_t q, std::int64_t m, std::int64_t t) {
    lemma6_validate(q, m, t);
    const std::int64_t umax = ipow(q * q, m - t);
    return sweep_report(
        TheoremId::lem6, {{"q", q}, {"m", m}, {"t", t}}, 0, umax,
        [&](std::int64_t u) { return lemma6_compute(q, m, t, u); });
}

// ---------------------------------------------------------------------------
// Prior-work comparison formulas
// ---------------------------------------------------------------------------

std::int64_t prior_bound_lemma19190(std::int64_t q, std::int64_t lambda,
                                    std::int64_t m, std::int64_t delta,
                                    std::int64_t t_fixed, std::int64_t s_fixed,
                                    std::string* matched) {
    require(is_prime_power(q), "prime power q required");
    require(lambda >= 1 && (q - 1) % lambda == 0 && lambda != q - 1,
            "lambda must divide q-1 and differ from q-1");
    require(m >= 2, "m >= 2 required");
    const std::int64_t n = (ipow(q, m) - 1) / lambda;
    require(delta >= 2 && delta <= n, "delta outside [2, n]");
    const std::int64_t smax = (q - 1) / lambda - 1;

    std::vector<CaseMatch> ms;
    for (std::int64_t t = 0; t <= m - 2; ++t) {
        if (t_fixed >= 0 && t != t_fixed) continue;
        const std::int64_t qt1 = ipow(q, t + 1);
        for (std::int64_t s = 1; s <= smax; ++s) {
            if (s_fixed >= 0 && s != s_fixed) continue;
            if (delta == (qt1 - q) / lambda + s + 1)
                keep_best(ms, (ipow(q, m - t) + lambda - 1) / lambda - s * ipow(q, m - t - 1),
                          "case1(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")");
            if (delta > (qt1 - 1) / lambda + (s - 1) * qt1 &&
                delta <= (qt1 - 1) / lambda + s * qt1 - 1)
                keep_best(ms, (ipow(q, m - t - 1) - 1) / lambda - s + 3,
                          "case2(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")");
            if (delta == (qt1 - 1) / lambda + s * qt1)
                keep_best(ms, (ipow(q, m - t - 1) - 1) / lambda - s + 2,
                          "case3(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")");
        }
        if (delta > (ipow(q, t + 2) - 1) / lambda - qt1 &&
            delta <= (ipow(q, t + 2) - q) / lambda + 1)
            keep_best(ms, (ipow(q, m - t - 1) - q) / lambda + 2,
                      "case4(t=" + std::to_string(t) + ")");
        if (lambda == 1 && q >= 5) {
            for (std::int64_t s = 1; s < q - 2; ++s) {
                if (s_fixed >= 0 && s != s_fixed) continue;
                if (delta >= s * qt1 && delta <= (s + 1) * qt1 - s * ipow(q, t) - 2)
                    keep_best(ms, ipow(q, m - t - 1) - s + 3,
                              "case5(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")");
            }
        }
    }
    if (ms.empty()) throw param_error("delta matches no case of the prior bound table");
    auto best = std::max_element(ms.begin(), ms.end(),
                                 [](const CaseMatch& a, const CaseMatch& b) {
                                     return a.bound < b.bound;
                                 });
    if (matched) *matched = join_matches(ms);
    return best->bound;
}

std::int64_t prior_bound_lemma19(std::int64_t q, std::int64_t m, std::int64_t delta,
                                 std::int64_t t_fixed, std::string* matched) {
    require(is_prime_power(q), "prime power q required");
    require(m >= 3, "m >= 3 required");
    const std::int64_t n = ipow(q, 2 * m) - 1;
    require(delta >= 2 && delta <= n, "delta outside [2, n]");

    std::vector<CaseMatch> ms;
    auto tag = [](const char* c, std::int64_t t) {
        return std::string(c) + "(t=" + std::to_string(t) + ")";
    };
    for (std::int64_t t = 1; t <= m; ++t) {
        if (t_fixed >= 0 && t != t_fixed) continue;
        const std::int64_t q2t1 = ipow(q, 2 * t - 1);
        const std::int64_t val = ipow(q, 2 * (m - t) + 1);
        if (t >= 2 && t <= m - 1) {
            for (std::int64_t b = 1; b <= q * q - 2; ++b)
                if (delta == q2t1 - b)
                    keep_best(ms, (b + 1) * val, tag("case1", t) + ",b=" + std::to_string(b));
        }
        for (std::int64_t s = 1; s <= q - 1; ++s)
            if (delta >= s * q2t1 && delta <= (s + 1) * q2t1 - 1)
                keep_best(ms, val - s + 1, tag("case2", t) + ",s=" + std::to_string(s));
        if (t <= m - 1) {
            for (std::int64_t a = 1; a <= q - 2; ++a)
                for (std::int64_t s = 0; s <= q - 1; ++s)
                    if (delta >= (a * q + s) * q2t1 && delta <= (a * q + s + 1) * q2t1 - 1)
                        keep_best(ms, val - a * q - s + 1,
                                  tag("case3", t) + ",a=" + std::to_string(a) + ",s=" +
                                      std::to_string(s));
        }
        if (t >= 2 && t <= m - 1) {
            for (std::int64_t s = 0; s <= q - 2; ++s)
                if (delta >= (q * q - q + s) * q2t1 && delta <= (q * q - q + s + 1) * q2t1 - 1)
                    keep_best(ms, val - q * q + q - s + 1,
                              tag("case4", t) + ",s=" + std::to_string(s));
            if (delta >= (q * q - 1) * q2t1 && delta <= ipow(q, 2 * t + 1) - q * q + 1)
                keep_best(ms, val - q * q + 2, tag("case5", t));
        }
    }
    if (ms.empty()) throw param_error("delta matches no case of the prior bound table");
    auto best = std::max_element(ms.begin(), ms.end(),
                                 [](const CaseMatch& a, const CaseMatch& b) {
                                     return a.bound < b.bound;
                                 });
    if (matched) *matched = join_matches(ms);
    return best->bound;
}

// ---------------------------------------------------------------------------
// Construction catalog
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kOrderCCd = 11125;    // [C, C*]A over GF(q)
constexpr std::int64_t kOrderCdC = 1112501;  // [C*, C]A over GF(q)
constexpr std::int64_t kOrderCCh = 1125;     // [C, C*H]A over GF(Q)
constexpr std::int64_t kOrderChC = 112501;   // [C*H, C]A over GF(Q)

std::vector<CaseMatch> thm3_matches(std::int64_t q, std::int64_t lambda,
                                    std::int64_t m, std::int64_t delta) {
    std::vector<CaseMatch> ms;
    const std::int64_t smax = (q - 1) / lambda - 1;
    if (m % 2 == 1) {
        const std::int64_t qh = ipow(q, (m + 1) / 2);  // q^{(m+1)/2}
        const std::int64_t ql = ipow(q, (m - 1) / 2);  // q^{(m-1)/2}
        const std::int64_t n = (ipow(q, m) - 1) / lambda;
        for (std::int64_t s = 1; s <= smax; ++s) {
            if (ge_sqrt(q - lambda * s, 2 * lambda * q) &&
                delta == (qh - q) / lambda + s + 1)
                keep_best(ms, (qh + lambda - 1) / lambda - s * ql,
                          "case1(s=" + std::to_string(s) + ")");
            // case 2 includes its endpoint, where the dual value drops by one
            const std::int64_t hi = (ql - 1) / lambda + s * ql;
            if (2 * (lambda * s) * (lambda * s) >= lambda * q &&
                gt_sqrt(2 * delta, 2 * n) &&
                delta > (ql - 1) / lambda + (s - 1) * ql && delta <= hi) {
                const std::int64_t dual_val =
                    (qh - 1) / lambda + (delta == hi ? -s + 2 : -s + 3);
                keep_best(ms, std::min(2 * delta, dual_val),
                          "case2(s=" + std::to_string(s) + ")");
            }
        }
        if (delta > (qh - 1) / lambda - ql && delta <= (qh - q) / lambda + 1)
            keep_best(ms, (qh - q) / lambda + 2, "case3");
        if (lambda == 1 && q >= 5) {
            for (std::int64_t s = 1; s <= smax; ++s) {
                if (delta >= s * ql && delta <= (s + 1) * ql - s * ipow(q, (m - 3) / 2) - 2) {
                    if (2 * s * s >= q && 2 * s <= q)
                        keep_best(ms, 2 * delta, "case5a(s=" + std::to_string(s) + ")");
                    if (2 * s > q && s < q - 2)
                        keep_best(ms, qh - s + 3, "case5b(s=" + std::to_string(s) + ")");
                }
            }
        }
    } else {
        const std::int64_t qh = ipow(q, m / 2);
        if (delta > qh - ipow(q, m / 2 - 1) - 1 && delta <= qh - q + 1)
            keep_best(ms, 2 * delta, "case4");
    }
    return ms;
}

std::vector<CaseMatch> thm4_matches(std::int64_t q, std::int64_t lambda,
                                    std::int64_t m, std::int64_t delta) {
    std::vector<CaseMatch> ms;
    if (m % 2 == 0) return ms;
    const std::int64_t smax = (q - 1) / lambda - 1;
    const std::int64_t qh = ipow(q, (m + 1) / 2);
    const std::int64_t ql = ipow(q, (m - 1) / 2);
    for (std::int64_t s = 1; s <= smax; ++s) {
        if (delta == (qh - q) / lambda + s + 1) {
            if (lambda * s >= (q + 1) / 2 && 2 * (q - lambda * s) * (q - lambda * s) >= lambda * q)
                keep_best(ms, 2 * ((qh + lambda - 1) / lambda - s * ql),
                          "case2x(s=" + std::to_string(s) + ")");
            if (lambda * s <= (q - 1) / 2)
                keep_best(ms, delta, "case1(s=" + std::to_string(s) + ")");
        }
        if ((lambda * s - lambda + 1) * (lambda * s - lambda + 1) >= 2 * lambda * q &&
            delta > (ql - 1) / lambda + (s - 1) * ql &&
            delta < (ql - 1 - lambda) / lambda + s * ql)
            keep_best(ms, delta, "case2(s=" + std::to_string(s) + ")");
        if (lambda == 1 && q >= 5 && s * s >= 2 * q && s < q - 2 &&
            delta >= s * ql && delta <= (s + 1) * ql - s * ipow(q, (m - 3) / 2) - 2)
            keep_best(ms, delta, "case4(s=" + std::to_string(s) + ")");
    }
    if (q * q > 4 * lambda * q + lambda * lambda &&
        delta > (qh - 1) / lambda - ql && delta <= (qh - q) / lambda + 1)
        keep_best(ms, delta, "case3");
    return ms;
}

std::vector<CaseMatch> remark_binary_matches(std::int64_t m, std::int64_t delta,
                                             std::int64_t order) {
    std::vector<CaseMatch> ms;
    if (order == kOrderCCd) {
        if (m % 2 == 0) {
            if (gt_sqrt(2 * delta, ipow(2, m + 1) - 2) && delta <= ipow(2, m / 2) - 1)
                keep_best(ms, 2 * delta, "even/2delta");
        } else {
            const std::int64_t lo = ipow(2, (m - 1) / 2);
            const std::int64_t mid = lo + ipow(2, (m - 3) / 2) - 1;
            if (delta > mid && delta <= ipow(2, (m + 1) / 2) - 1)
                keep_best(ms, ipow(2, (m + 1) / 2), "odd/high");
            if (delta > lo && delta <= mid)
                keep_best(ms, ipow(2, (m + 1) / 2) + 1, "odd/mid");
            if (delta == lo) keep_best(ms, 2 * delta, "odd/2delta");
        }
    } else if (order == kOrderCdC) {
        if (m % 2 == 0) {
            if (gt_sqrt(delta, ipow(2, m + 1) - 2) && delta <= ipow(2, (m + 2) / 2) - 1)
                keep_best(ms, delta, "even/delta");
        } else {
            const std::int64_t hi = ipow(2, (m + 1) / 2);
            if (delta > hi + ipow(2, (m - 1) / 2) - 1 && delta <= ipow(2, (m + 3) / 2) - 1)
                keep_best(ms, hi, "odd/high");
            if (delta >= hi && delta <= hi + 2) keep_best(ms, delta, "odd/delta");
            if (delta > hi + 2 && delta <= hi + ipow(2, (m - 1) / 2) - 1)
                keep_best(ms, hi + 2, "odd/mid");
        }
    } else {
        throw param_error("remark_binary construction must be 11125 or 1112501");
    }
    return ms;
}

std::vector<CaseMatch> thm7_matches(std::int64_t q, std::int64_t m,
                                    std::int64_t delta) {
    std::vector<CaseMatch> ms;
    const std::int64_t Q = q * q;
    if (m % 2 == 0) {
        const std::int64_t qm1 = ipow(q, m - 1);
        for (std::int64_t a = 1; a <= q - 2; ++a)
            for (std::int64_t s = 0; s <= q - 1; ++s)
                if (delta >= (a * q + s) * qm1 && delta <= (a * q + s + 1) * qm1 - 1) {
                    if (q * q - 2 * a * q <= 2 * s)
                        keep_best(ms, ipow(q, m + 1) - a * q - s + 1,
                                  "even/value(a=" + std::to_string(a) + ",s=" +
                                      std::to_string(s) + ")");
                    else
                        keep_best(ms, 2 * delta,
                                  "even/2delta(a=" + std::to_string(a) + ",s=" +
                                      std::to_string(s) + ")");
                }
        for (std::int64_t s = 0; s <= q - 2; ++s)
            if (delta >= (Q - q + s) * qm1 && delta <= (Q - q + s + 1) * qm1 - 1)
                keep_best(ms, ipow(q, m + 1) - Q + q - s + 1,
                          "even/value2(s=" + std::to_string(s) + ")");
        if (delta >= (Q - 1) * qm1 && delta <= ipow(q, m + 1) - Q + 1)
            keep_best(ms, ipow(q, m + 1) - Q + 2, "even/value3");
        for (std::int64_t s = 0; s <= q - 1; ++s)
            if (2 * s * s > q * q && s <= q - 1 && delta >= s * qm1 &&
                delta <= (s + 1) * qm1 - 1)
                keep_best(ms, 2 * delta, "even/2delta-s(s=" + std::to_string(s) + ")");
    } else {
        const std::int64_t qm2 = ipow(q, m - 2);
        for (std::int64_t b = 1; b <= Q - 2; ++b)
            if (delta == ipow(q, m) - b)
                keep_best(ms, 2 * delta, "odd/2delta(b=" + std::to_string(b) + ")");
        for (std::int64_t a = 1; a <= q - 2; ++a)
            for (std::int64_t s = 0; s <= q - 1; ++s)
                if (2 * ipow(q, 4) <= (2 * a * q + 2 * s) * (2 * a * q + 2 * s) &&
                    delta >= (a * q + s) * qm2 && delta <= (a * q + s + 1) * qm2 - 1)
                    keep_best(ms, 2 * delta,
                              "odd/2delta-a(a=" + std::to_string(a) + ",s=" +
                                  std::to_string(s) + ")");
        if (q >= 4)
            for (std::int64_t s = 0; s <= q - 2; ++s)
                if (delta >= (Q - q + s) * qm2 && delta <= (Q - q + s + 1) * qm2 - 1)
                    keep_best(ms, 2 * delta, "odd/2delta-b(s=" + std::to_string(s) + ")");
        if (delta >= (Q - 1) * qm2 && delta <= ipow(q, m) - Q + 1)
            keep_best(ms, 2 * delta, "odd/2delta-c");
    }
    return ms;
}

std::vector<CaseMatch> thm8_matches(std::int64_t q, std::int64_t m,
                                    std::int64_t delta) {
    std::vector<CaseMatch> ms;
    const std::int64_t Q = q * q;
    if (m % 2 == 1) {
        const std::int64_t qm = ipow(q, m);
        for (std::int64_t s = 2; s <= q - 1; ++s)
            if (delta >= s * qm && delta <= (s + 1) * qm - 1)
                keep_best(ms, 2 * ipow(q, m) - 2 * s + 2,
                          "odd/case1(s=" + std::to_string(s) + ")");
        for (std::int64_t a = 1; a <= q - 2; ++a)
            for (std::int64_t s = 0; s <= q - 1; ++s)
                if (delta >= (a * q + s) * qm && delta <= (a * q + s + 1) * qm - 1)
                    keep_best(ms, 2 * ipow(q, m) - 2 * a * q - 2 * s + 2,
                              "odd/case2(a=" + std::to_string(a) + ",s=" +
                                  std::to_string(s) + ")");
        for (std::int64_t s = 0; s <= q - 2; ++s)
            if (delta >= (Q - q + s) * qm && delta <= (Q - q + s + 1) * qm - 1)
                keep_best(ms, 2 * ipow(q, m) - 2 * Q + 2 * q - 2 * s + 2,
                          "odd/case3(s=" + std::to_string(s) + ")");
        if (delta >= (Q - 1) * qm && delta <= ipow(q, m + 2) - Q + 1)
            keep_best(ms, 2 * ipow(q, m) - 2 * Q + 4, "odd/case4");
    } else {
        const std::int64_t qm1 = ipow(q, m - 1);
        for (std::int64_t a = 2; a <= q - 2; ++a)
            for (std::int64_t s = 0; s <= q - 1; ++s)
                if (Q >= a * q + s && delta >= (a * q + s) * qm1 &&
                    delta <= (a * q + s + 1) * qm1 - 1)
                    keep_best(ms, delta,
                              "even/case1(a=" + std::to_string(a) + ",s=" +
                                  std::to_string(s) + ")");
        for (std::int64_t s = 0; s <= q - 2; ++s)
            if (delta >= (Q - q + s) * qm1 && delta <= (Q - q + s + 1) * qm1 - 1)
                keep_best(ms, delta, "even/case2(s=" + std::to_string(s) + ")");
        if (delta >= (Q - 1) * qm1 && delta <= ipow(q, m + 1) - Q + 1)
            keep_best(ms, delta, "even/case3");
    }
    return ms;
}

} // namespace

BoundClaim catalog_claim(TheoremId id, std::map<std::string, std::int64_t> params) {
    BoundClaim c;
    c.id = id;
    std::vector<CaseMatch> ms;

    switch (id) {
        case TheoremId::thm3:
        case TheoremId::thm4: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t lambda = get_param(params, "lambda");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            require(is_prime_power(q), "prime power q required");
            require(lambda >= 1 && (q - 1) % lambda == 0 && lambda != q - 1,
                    "lambda must divide q-1 and differ from q-1");
            require(m >= 2, "m >= 2 required");
            const std::int64_t n = (ipow(q, m) - 1) / lambda;
            require(delta >= 2 && delta <= n, "delta outside [2, n]");
            params["n"] = n;
            params["construction"] = id == TheoremId::thm3 ? kOrderCCd : kOrderCdC;
            ms = id == TheoremId::thm3 ? thm3_matches(q, lambda, m, delta)
                                       : thm4_matches(q, lambda, m, delta);
            c.cls = BoundClass::square_root;
            break;
        }
        case TheoremId::remark_binary: {
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            const std::int64_t order = get_param(params, "construction");
            require(m >= 3, "m >= 3 required");
            const std::int64_t n = ipow(2, m) - 1;
            require(delta >= 2 && delta <= n, "delta outside [2, n]");
            params["q"] = 2;
            params["n"] = n;
            ms = remark_binary_matches(m, delta, order);
            c.cls = BoundClass::square_root;
            break;
        }
        case TheoremId::thm5:
        case TheoremId::fu24_thm16: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            require(is_prime_power(q) && q % 2 == 1 && q >= 3, "odd prime power q >= 3 required");
            require(m >= 4 && m % 2 == 0, "even m >= 4 required");
            const std::int64_t n = ipow(q, m) + 1;
            require(delta >= 2 && delta <= n, "delta outside [2, n]");
            params["n"] = n;
            if (id == TheoremId::thm5) params["construction"] = kOrderCdC;
            const std::int64_t qh = ipow(q, m / 2);
            for (std::int64_t l = 2; l <= (q - 3) / 2; ++l) {
                const std::int64_t lo = l * qh + (qh + 3) / 2;
                const std::int64_t hi = (l + 1) * qh + (qh + 3) / 2;
                if (delta >= lo && delta < hi) {
                    if (id == TheoremId::thm5)
                        keep_best(ms, 2 * qh - 4 * l - 2, "l=" + std::to_string(l));
                    else
                        keep_best(ms, qh - 2 * l - 1, "l=" + std::to_string(l));
                }
            }
            c.cls = id == TheoremId::thm5 ? BoundClass::square_root
                                          : BoundClass::dual_distance;
            break;
        }
        case TheoremId::thm6: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t s = get_param(params, "s");
            const std::int64_t t = get_param(params, "t");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            const std::int64_t order = get_param(params, "construction");
            require(is_prime_power(q) && q != 2, "prime power q != 2 required");
            require(s >= 1 && m % s == 0 && t >= 2 && t <= m / s - 1,
                    "need s | m and 2 <= t <= m/s - 1");
            require(m + s == 2 * s * t, "need m + s = 2st");
            const std::int64_t qs = ipow(q, s);
            const std::int64_t n = (ipow(q, m) - 1) / (qs - 1);
            const std::int64_t lower = (ipow(q, s * t) - 1) / (qs - 1);
            require(delta > lower && delta <= lower + ipow(q, t - 1),
                    "delta outside the theorem range");
            params["n"] = n;
            if (order == kOrderCCd)
                keep_best(ms, ipow(q, (m - s) / 2), "construction 11125");
            else if (order == kOrderCdC)
                keep_best(ms, delta, "construction 1112501");
            else
                throw param_error("thm6 construction must be 11125 or 1112501");
            c.cls = BoundClass::square_root_like;
            break;
        }
        case TheoremId::thm7:
        case TheoremId::thm8: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            require(is_prime_power(q), "prime power q required");
            require(m >= 3, "m >= 3 required");
            const std::int64_t n = ipow(q, 2 * m) - 1;
            require(delta >= 2 && delta <= n, "delta outside [2, n]");
            params["Q"] = q * q;
            params["n"] = n;
            params["construction"] = id == TheoremId::thm7 ? kOrderCCh : kOrderChC;
            ms = id == TheoremId::thm7 ? thm7_matches(q, m, delta)
                                       : thm8_matches(q, m, delta);
            c.cls = BoundClass::square_root;
            break;
        }
        case TheoremId::thm9: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            const std::int64_t order = get_param(params, "construction");
            require(is_prime_power(q), "prime power q required");
            require(m >= 3 && m % 2 == 1, "odd m >= 3 required");
            const std::int64_t Q = q * q;
            const std::int64_t n = (ipow(Q, m) - 1) / (Q - 1);
            const std::int64_t lower = (ipow(Q, (m + 1) / 2) - 1) / (Q - 1);
            require(delta > lower && delta <= lower + ipow(q, (m - 1) / 2),
                    "delta outside the theorem range");
            params["Q"] = Q;
            params["n"] = n;
            if (order == kOrderCCh)
                keep_best(ms, ipow(Q, (m - 1) / 2) + 1, "construction 1125");
            else if (order == kOrderChC)
                keep_best(ms, delta, "construction 112501");
            else
                throw param_error("thm9 construction must be 1125 or 112501");
            c.cls = BoundClass::square_root_like;
            break;
        }
        case TheoremId::lem_prior_19190: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t lambda = get_param(params, "lambda");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            std::string matched;
            const std::int64_t v = prior_bound_lemma19190(q, lambda, m, delta, -1, -1, &matched);
            params["n"] = (ipow(q, m) - 1) / lambda;
            c.params = std::move(params);
            c.claimed_bound = v;
            c.cls = BoundClass::dual_distance;
            c.detail = matched;
            return c;
        }
        case TheoremId::lem_prior_19: {
            const std::int64_t q = get_param(params, "q");
            const std::int64_t m = get_param(params, "m");
            const std::int64_t delta = get_param(params, "delta");
            std::string matched;
            const std::int64_t v = prior_bound_lemma19(q, m, delta, -1, &matched);
            params["Q"] = q * q;
            params["n"] = ipow(q, 2 * m) - 1;
            c.params = std::move(params);
            c.claimed_bound = v;
            c.cls = BoundClass::dual_distance;
            c.detail = matched;
            return c;
        }
        default:
            throw param_error("catalog_claim does not handle this bound id");
    }

    if (ms.empty())
        throw param_error("delta matches no case of " + std::string(theorem_name(id)));
    auto best = std::max_element(
        ms.begin(), ms.end(),
        [](const CaseMatch& a, const CaseMatch& b) { return a.bound < b.bound; });
    c.claimed_bound = best->bound;
    c.detail = join_matches(ms);
    c.params = std::move(params);
    return c;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

struct RunScanOutcome {
    bool ran = false;
    bool range_contained = false;
    std::uint64_t dual_run_bound = 0;
    std::string note;
};

RunScanOutcome run_scan_dual(std::int64_t n, std::int64_t field_order,
                             std::int64_t delta, Inner inner,
                             std::int64_t range_lo, std::int64_t range_hi) {
    RunScanOutcome out;
    if (n > static_cast<std::int64_t>(kRunScanMaxLength)) {
        out.note = "n exceeds the run-scan cap";
        return out;
    }
    DefiningSet T = bch_defining_set(n, field_order, delta);
    DefiningSet D = dual_defining_set(T, inner);
    out.ran = true;
    out.range_contained = true;
    for (std::int64_t i = range_lo; i <= range_hi; ++i)
        if (!D.contains(static_cast<std::uint64_t>(i))) {
            out.range_contained = false;
            break;
        }
    out.dual_run_bound = bch_bound(D);
    std::ostringstream os;
    os << "|T| = " << T.elements.size() << ", proof range {" << range_lo << ".."
       << range_hi << "} " << (out.range_contained ? "contained in" : "NOT contained in")
       << (inner == Inner::euclidean ? " T^perp" : " T^perpH")
       << ", dual run bound " << out.dual_run_bound;
    out.note = os.str();
    return out;
}

struct ExhaustiveOutcome {
    bool exact = false;
    bool certified = false; ///< lower bound >= claimed even if not exact
    std::uint64_t value = 0;
    std::string note;
};

ExhaustiveOutcome exhaustive_dual_distance(std::int64_t n, std::int64_t field_order,
                                           std::int64_t delta, Inner inner,
                                           std::int64_t claimed, std::uint64_t budget) {
    ExhaustiveOutcome out;
    std::uint32_t p = 0, e = 0;
    prime_power_decompose(static_cast<std::uint64_t>(field_order), p, e);
    BCHSpec spec = bch_code(n, field_order, delta);
    LinearCode mat = bch_matrix(spec);
    LinearCode dual_mat = inner == Inner::euclidean ? dual(mat) : hermitian_dual(mat);
    DistanceResult dist = min_distance(dual_mat, budget);
    std::ostringstream os;
    if (dist.kind == DistanceResult::Kind::exact) {
        out.exact = true;
        out.certified = dist.value >= static_cast<std::uint64_t>(claimed);
        out.value = dist.value;
        os << "exact dual distance " << dist.value << " over " << dist.enumerated
           << " codewords";
    } else {
        out.certified = dist.value >= static_cast<std::uint64_t>(claimed);
        out.value = dist.value;
        os << "dual distance >= " << dist.value << " (weight sweep to "
           << dist.swept_weight << ", " << dist.enumerated << " codewords)";
    }
    out.note = os.str();
    return out;
}

} // namespace

BoundReport verify_claim(const BoundClaim& claim, VerifyMode mode,
                         std::uint64_t budget) {
    BoundReport r;
    r.claim = claim;
    std::ostringstream ev;

    switch (claim.id) {
        case TheoremId::thm1:
        case TheoremId::thm2: {
            const bool hermitian = claim.id == TheoremId::thm2;
            const std::int64_t q = claim.params.at("q");
            const std::int64_t m = claim.params.at("m");
            const std::int64_t t = claim.params.at("t");
            const std::int64_t delta = claim.params.at("delta");
            const std::int64_t n = claim.params.at("n");
            const std::int64_t field_order = hermitian ? q * q : q;
            std::int64_t range_lo, range_hi, check_value;
            if (hermitian) {
                const std::int64_t Q = q * q;
                range_lo = (ipow(Q, m - t + 1) - 1) / (Q - 1) + 1;
                range_hi = range_lo + ipow(Q, m - t) - 1;
                check_value = claim.params.at("table_bound"); // weaker companion value
            } else {
                const std::int64_t s = claim.params.at("s");
                range_lo = (ipow(q, m - (t - 1) * s) - 1) / (ipow(q, s) - 1) + 1;
                range_hi = range_lo + ipow(q, m - s * t) - 2;
                check_value = claim.claimed_bound;
            }

            r.status = VerifyStatus::inconclusive;
            if (mode == VerifyMode::run_scan || mode == VerifyMode::both) {
                RunScanOutcome rs = run_scan_dual(n, field_order, delta,
                                                  hermitian ? Inner::hermitian
                                                            : Inner::euclidean,
                                                  range_lo, range_hi);
                ev << rs.note;
                if (rs.ran) {
                    if (rs.dual_run_bound >= static_cast<std::uint64_t>(check_value))
                        r.status = VerifyStatus::verified_bound;
                    if (hermitian) {
                        ev << "; theorem value " << claim.claimed_bound
                           << (rs.dual_run_bound >=
                                       static_cast<std::uint64_t>(claim.claimed_bound)
                                   ? " also certified"
                                   : " not certified by the run");
                    }
                }
            }
            if (mode == VerifyMode::exhaustive || mode == VerifyMode::both) {
                std::uint32_t p = 0, e = 0;
                prime_power_decompose(static_cast<std::uint64_t>(field_order), p, e);
                const std::int64_t amb_order = ipow(field_order, m);
                if (amb_order > (std::int64_t{1} << 20)) {
                    if (!ev.str().empty()) ev << "; ";
                    ev << "exhaustive check skipped: ambient field " << field_order
                       << "^" << m << " exceeds the supported order";
                } else {
                    ExhaustiveOutcome ex = exhaustive_dual_distance(
                        n, field_order, delta,
                        hermitian ? Inner::hermitian : Inner::euclidean, check_value,
                        budget);
                    if (!ev.str().empty()) ev << "; ";
                    ev << ex.note;
                    if (ex.exact) {
                        if (ex.certified)
                            r.status = VerifyStatus::verified_exact;
                        else {
                            r.status = VerifyStatus::refuted;
                            ev << "; WITNESS: exact dual distance " << ex.value << " < "
                               << check_value;
                        }
                    } else if (ex.certified && r.status != VerifyStatus::verified_exact) {
                        r.status = VerifyStatus::verified_bound;
                    }
                }
            }
            break;
        }
        case TheoremId::lem5: {
            const auto& p = claim.params;
            return lemma5_threshold_check(p.at("q"), p.at("s"), p.at("t"), p.at("m"),
                                          p.at("u"));
        }
        case TheoremId::lem6: {
            const auto& p = claim.params;
            return lemma6_threshold_check(p.at("q"), p.at("m"), p.at("t"), p.at("u"));
        }
        default: {
            // catalog claims: symbolic square-root(-like) comparison against
            // the constructed code length 2n
            const std::int64_t n = claim.params.at("n");
            const std::int64_t cb = claim.claimed_bound;
            if (claim.cls == BoundClass::square_root) {
                const bool ok = cb * cb > 2 * n;
                ev << "claimed " << cb << ", claimed^2 = " << cb * cb
                   << (ok ? " > " : " <= ") << "2n = " << 2 * n;
                r.status = ok ? VerifyStatus::verified_bound : VerifyStatus::refuted;
                if (!ok) ev << "; WITNESS: square-root comparison fails";
            } else if (claim.cls == BoundClass::square_root_like) {
                const bool ok = 2 * cb * cb > n;
                ev << "claimed " << cb << ", 2*claimed^2 = " << 2 * cb * cb
                   << (ok ? " > " : " <= ") << "n = " << n;
                r.status = ok ? VerifyStatus::verified_bound : VerifyStatus::refuted;
                if (!ok) ev << "; WITNESS: square-root-like comparison fails";
            } else {
                // prior / underlying dual-distance formulas: certify via the
                // dual defining-set run when the length is desk-scale
                std::int64_t n_code = n;
                std::int64_t field_order = claim.params.count("Q")
                                               ? claim.params.at("Q")
                                               : claim.params.at("q");
                const std::int64_t delta = claim.params.at("delta");
                const Inner inner = claim.params.count("Q") ? Inner::hermitian
                                                            : Inner::euclidean;
                if (claim.id == TheoremId::fu24_thm16) {
                    field_order = claim.params.at("q");
                    // n = q^m + 1 lives over GF(q) with the Euclidean product
                }
                if (n_code <= static_cast<std::int64_t>(kRunScanMaxLength)) {
                    DefiningSet T = bch_defining_set(n_code, field_order, delta);
                    DefiningSet D = dual_defining_set(
                        T, claim.id == TheoremId::lem_prior_19 ? Inner::hermitian
                                                               : inner);
                    const std::uint64_t rb = bch_bound(D);
                    ev << "dual run bound " << rb << " vs claimed " << cb;
                    r.status = rb >= static_cast<std::uint64_t>(cb)
                                   ? VerifyStatus::verified_bound
                                   : VerifyStatus::inconclusive;
                    if (r.status == VerifyStatus::inconclusive)
                        ev << "; run certificate insufficient (bound may still hold)";
                } else {
                    ev << "length " << n_code << " exceeds the run-scan cap";
                    r.status = VerifyStatus::inconclusive;
                }
            }
            break;
        }
    }
    r.evidence = ev.str();
    return r;
}

// ---------------------------------------------------------------------------
// Built-in tables
// ---------------------------------------------------------------------------

std::vector<TableRow> reproduce_table(int which, std::uint64_t budget) {
    std::vector<TableRow> rows;
    if (which == 1) {
        struct Def {
            std::int64_t t, m, q, dlo, dhi;
            std::vector<std::int64_t> priors;
            std::int64_t bound;
        };
        const std::vector<Def> defs = {
            {2, 4, 3, 5, 7, {5, 7}, 9},
            {2, 5, 3, 5, 7, {14, 16}, 27},
            {3, 5, 3, 14, 22, {5, 7}, 9},
            {2, 4, 5, 7, 11, {7, 9}, 25},
        };
        for (std::size_t i = 0; i < defs.size(); ++i) {
            const Def& d = defs[i];
            TableRow row;
            row.which = 1;
            row.t = d.t;
            row.m = d.m;
            row.q = d.q;
            row.delta_min = d.dlo;
            row.delta_max = d.dhi;
            row.prior_bounds = d.priors;
            row.bound = d.bound;
            row.theorem_bound = d.bound;
            bool all_ok = true;
            bool exhaustive_done = false;
            std::ostringstream ev;
            for (std::int64_t delta = d.dlo; delta <= d.dhi; ++delta) {
                BoundClaim c = theorem1_claim(d.q, 1, d.m, d.t, delta);
                row.n = c.params.at("n");
                const bool exhaustive_here = i == 0 && delta == d.dlo;
                BoundReport rep = verify_claim(
                    c, exhaustive_here ? VerifyMode::both : VerifyMode::run_scan, budget);
                if (delta == d.dlo) ev << rep.evidence;
                if (rep.status == VerifyStatus::verified_exact) exhaustive_done = true;
                all_ok = all_ok && (rep.status == VerifyStatus::verified_bound ||
                                    rep.status == VerifyStatus::verified_exact);
            }
            row.status = !all_ok ? VerifyStatus::inconclusive
                         : exhaustive_done ? VerifyStatus::verified_exact
                                           : VerifyStatus::verified_bound;
            ev << "; all delta in [" << d.dlo << ", " << d.dhi << "] checked";
            row.evidence = ev.str();
            rows.push_back(std::move(row));
        }
    } else if (which == 2) {
        struct Def {
            std::int64_t t, m, q; // q = sqrt(Q)
            std::int64_t dlo, dhi;
            std::vector<std::int64_t> priors;
            std::int64_t bound;
            bool analogue;
        };
        const std::vector<Def> defs = {
            {2, 4, 3, 11, 13, {31}, 81, false},
            {2, 4, 5, 27, 29, {131}, 625, false},
            {2, 3, 3, 11, 13, {}, 9, true}, // desk-scale analogue
        };
        for (const Def& d : defs) {
            TableRow row;
            row.which = 2;
            row.analogue = d.analogue;
            row.t = d.t;
            row.m = d.m;
            row.q = d.q * d.q;
            row.delta_min = d.dlo;
            row.delta_max = d.dhi;
            row.prior_bounds = d.priors;
            row.bound = d.bound;
            row.theorem_bound = d.bound + 1;
            bool all_ok = true;
            std::ostringstream ev;
            for (std::int64_t delta = d.dlo; delta <= d.dhi; ++delta) {
                BoundClaim c = theorem2_claim(d.q, d.m, d.t, delta);
                row.n = c.params.at("n");
                BoundReport rep = verify_claim(c, VerifyMode::run_scan, budget);
                if (delta == d.dlo) ev << rep.evidence;
                all_ok = all_ok && (rep.status == VerifyStatus::verified_bound ||
                                    rep.status == VerifyStatus::verified_exact);
            }
            row.status = all_ok ? VerifyStatus::verified_bound : VerifyStatus::inconclusive;
            ev << "; all delta in [" << d.dlo << ", " << d.dhi << "] checked";
            row.evidence = ev.str();
            rows.push_back(std::move(row));
        }
    } else {
        throw param_error("table selector must be 1 or 2");
    }
    return rows;
}

} // namespace bchmp::bounds
