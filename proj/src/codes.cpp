/**************************************************************************
 * codes.cpp
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

#include "bchmp/codes.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "bchmp/kernels.hpp"

namespace bchmp {

namespace {

std::size_t rref_in_place(const Field& f, std::vector<std::vector<Elem>>& m,
                          std::size_t n) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const Elem s = f.inv(m[r][col]);
        if (s != 1)
            for (Elem& x : m[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Elem c = m[i][col];
            for (std::size_t t = col; t < n; ++t)
                m[i][t] = f.sub(m[i][t], f.mul(c, m[r][t]));
        }
        ++r;
    }
    m.resize(r);
    return r;
}

std::vector<std::size_t> pivot_columns(const std::vector<std::vector<Elem>>& rref,
                                       std::size_t n) {
    std::vector<std::size_t> piv;
    piv.reserve(rref.size());
    for (const auto& row : rref) {
        std::size_t c = 0;
        while (c < n && row[c] == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

std::uint32_t hermitian_conj_order(const Field& f) {
    if (f.degree() % 2 != 0)
        throw param_error("hermitian inner product needs a square field order, got " +
                          std::to_string(f.order()));
    std::uint32_t q0 = 1;
    for (std::uint32_t i = 0; i < f.degree() / 2; ++i) q0 *= f.characteristic();
    return q0;
}

} // namespace

LinearCode::LinearCode(const Field& f, std::size_t n,
                       std::vector<std::vector<Elem>> spanning_rows)
    : f_(&f), n_(n), rows_(std::move(spanning_rows)) {
    for (const auto& row : rows_) {
        if (row.size() != n)
            throw param_error("generator row length mismatch");
        for (Elem x : row)
            if (x >= f.order())
                throw param_error("generator entry outside the field");
    }
    rref_in_place(f, rows_, n_);
}

LinearCode LinearCode::zero(const Field& f, std::size_t n) {
    return LinearCode(f, n, {});
}

LinearCode LinearCode::full(const Field& f, std::size_t n) {
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return LinearCode(f, n, std::move(rows));
}

bool LinearCode::contains(const std::vector<Elem>& word) const {
    if (word.size() != n_) throw param_error("word length mismatch");
    std::vector<Elem> w = word;
    const auto piv = pivot_columns(rows_, n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Elem c = w[piv[r]];
        if (c == 0) continue;
        for (std::size_t t = piv[r]; t < n_; ++t)
            w[t] = f_->sub(w[t], f_->mul(c, rows_[r][t]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (!(sub.field() == *f_) || sub.length() != n_)
        throw param_error("containment test across different ambient spaces");
    for (const auto& row : sub.rows())
        if (!contains(row)) return false;
    return true;
}

LinearCode dual(const LinearCode& c) {
    const Field& f = c.field();
    const std::size_t n = c.length();
    const auto& G = c.rows();
    const auto piv = pivot_columns(G, n);
    std::vector<bool> is_piv(n, false);
    for (std::size_t p : piv) is_piv[p] = true;

    std::vector<std::vector<Elem>> h;
    h.reserve(n - G.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (is_piv[j]) continue;
        std::vector<Elem> row(n, 0);
        row[j] = 1;
        for (std::size_t r = 0; r < G.size(); ++r)
            row[piv[r]] = f.neg(G[r][j]);
        h.push_back(std::move(row));
    }
    return LinearCode(f, n, std::move(h));
}

LinearCode hermitian_dual(const LinearCode& c) {
    const Field& f = c.field();
    const std::uint32_t q0 = hermitian_conj_order(f);
    std::vector<std::vector<Elem>> conj = c.rows();
    for (auto& row : conj)
        for (Elem& x : row) x = f.pow(x, q0);
    return dual(LinearCode(f, c.length(), std::move(conj)));
}

DualityStatus self_duality_status(const LinearCode& c, Inner inner) {
    const Field& f = c.field();
    const std::uint32_t q0 = inner == Inner::hermitian ? hermitian_conj_order(f) : 1;
    auto gram_zero = [&](const LinearCode& code) {
        const auto& g = code.rows();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i; j < g.size(); ++j) {
                Elem dot = 0;
                for (std::size_t t = 0; t < code.length(); ++t) {
                    Elem rhs = inner == Inner::hermitian ? f.pow(g[j][t], q0) : g[j][t];
                    dot = f.add(dot, f.mul(g[i][t], rhs));
                }
                if (dot != 0) return false;
            }
        return true;
    };

    DualityStatus s;
    s.self_orthogonal = gram_zero(c);
    const LinearCode d = inner == Inner::hermitian ? hermitian_dual(c) : dual(c);
    s.dual_containing = gram_zero(d);
    s.self_dual = s.self_orthogonal && 2 * c.dim() == c.length();
    return s;
}

// ---------------------------------------------------------------------------
// Minimum-distance enumeration.
//
// Codewords are enumerated up to scalar multiples: for each leading message
// position j the coefficient is fixed to 1 and the remaining digits run
// through a reflected mixed-radix Gray sequence, so each step is a single
// precomputed row addition. Symbols live in digit planes (bytes for odd
// characteristic, packed bits for characteristic 2) handled by the kernels
// module; fields with characteristic > 127 fall back to a plain element
// buffer.
// ---------------------------------------------------------------------------

namespace {

struct ByteAccum {
    const kernels::Ops* ops;
    std::uint8_t p;
    std::size_t n;
    std::uint32_t planes;
    std::vector<std::uint8_t> buf;
    std::vector<const std::uint8_t*> ptrs;

    using Row = std::vector<std::uint8_t>;

    ByteAccum(const Field& f, std::size_t n_)
        : ops(&kernels::active_ops()),
          p(static_cast<std::uint8_t>(f.characteristic())),
          n(n_),
          planes(f.degree()),
          buf(static_cast<std::size_t>(planes) * n_, 0) {
        for (std::uint32_t k = 0; k < planes; ++k) ptrs.push_back(buf.data() + k * n);
    }

    static Row encode(const Field& f, const std::vector<Elem>& row) {
        const std::size_t n = row.size();
        Row r(static_cast<std::size_t>(f.degree()) * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Elem v = row[i];
            for (std::uint32_t k = 0; k < f.degree(); ++k) {
                r[k * n + i] = static_cast<std::uint8_t>(v % f.characteristic());
                v /= f.characteristic();
            }
        }
        return r;
    }

    void reset() { std::fill(buf.begin(), buf.end(), 0); }
    void add(const Row& row) { ops->add_mod_p_u8(buf.data(), row.data(), buf.size(), p); }
    std::size_t weight() const {
        if (planes == 1) return ops->count_nonzero_u8(buf.data(), n);
        return ops->count_nonzero_any_u8(ptrs.data(), planes, n);
    }
};

struct BitAccum {
    const kernels::Ops* ops;
    std::size_t nwords;
    std::uint32_t planes;
    std::vector<std::uint64_t> buf;
    std::vector<const std::uint64_t*> ptrs;

    using Row = std::vector<std::uint64_t>;

    BitAccum(const Field& f, std::size_t n)
        : ops(&kernels::active_ops()), nwords((n + 63) / 64), planes(f.degree()),
          buf(static_cast<std::size_t>(f.degree()) * nwords, 0) {
        for (std::uint32_t k = 0; k < planes; ++k) ptrs.push_back(buf.data() + k * nwords);
    }

    static Row encode(const Field& f, const std::vector<Elem>& row) {
        const std::size_t n = row.size();
        const std::size_t nwords = (n + 63) / 64;
        Row r(static_cast<std::size_t>(f.degree()) * nwords, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Elem v = row[i];
            for (std::uint32_t k = 0; k < f.degree(); ++k) {
                if (v & 1) r[k * nwords + i / 64] |= 1ull << (i % 64);
                v >>= 1;
            }
        }
        return r;
    }

    void reset() { std::fill(buf.begin(), buf.end(), 0); }
    void add(const Row& row) { ops->xor_u64(buf.data(), row.data(), buf.size()); }
    std::size_t weight() const {
        if (planes == 1) return ops->popcount_u64(buf.data(), nwords);
        return ops->popcount_or_u64(ptrs.data(), planes, nwords);
    }
};

struct WideAccum {
    const Field* f;
    std::vector<Elem> buf;

    using Row = std::vector<Elem>;

    WideAccum(const Field& f_, std::size_t n) : f(&f_), buf(n, 0) {}

    static Row encode(const Field&, const std::vector<Elem>& row) { return row; }

    void reset() { std::fill(buf.begin(), buf.end(), 0); }
    void add(const Row& row) {
        for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = f->add(buf[i], row[i]);
    }
    std::size_t weight() const {
        std::size_t c = 0;
        for (Elem x : buf) c += x != 0;
        return c;
    }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t k) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < k; ++i) v = sat_mul(v, q);
    return v;
}

template <class Accum>
struct EnumCtx {
    const Field* f;
    std::size_t k, n;
    std::uint32_t q;
    // scaled[i][c] = encoding of c * row_i
    std::vector<std::vector<typename Accum::Row>> scaled;

    EnumCtx(const LinearCode& code) : f(&code.field()), k(code.dim()), n(code.length()),
                                      q(code.field().order()) {
        scaled.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            scaled[i].reserve(q);
            for (Elem c = 0; c < q; ++c) {
                std::vector<Elem> r(n);
                for (std::size_t t = 0; t < n; ++t) r[t] = f->mul(c, code.rows()[i][t]);
                scaled[i].push_back(Accum::encode(*f, r));
            }
        }
    }
};

// One enumeration block: leading message coefficient 1 at position j,
// optionally a fixed digit v at position j+1, remaining digits Gray-coded.
// The early exit at weight 1 uses only block-local state so the enumerated
// count stays independent of how blocks are assigned to workers.
template <class Accum>
std::pair<std::uint64_t, std::uint64_t> enumerate_block(const EnumCtx<Accum>& ctx,
                                                        Accum& acc, std::size_t j,
                                                        int fixed_v) {
    acc.reset();
    acc.add(ctx.scaled[j][1]);
    std::size_t start = j + 1;
    if (fixed_v >= 0) {
        if (fixed_v > 0) acc.add(ctx.scaled[j + 1][static_cast<Elem>(fixed_v)]);
        start = j + 2;
    }
    const std::size_t r = ctx.k - start;
    std::uint64_t count = 1;
    std::uint64_t best = acc.weight();
    if (best == 1) return {best, count};

    // loopless reflected mixed-radix Gray iteration over the free digits
    std::vector<std::uint32_t> a(r, 0);
    std::vector<int> dir(r, 1);
    std::vector<std::uint32_t> focus(r + 1);
    std::iota(focus.begin(), focus.end(), 0);
    while (true) {
        const std::uint32_t t = focus[0];
        focus[0] = 0;
        if (t == r) break;
        const std::uint32_t old = a[t];
        a[t] = static_cast<std::uint32_t>(static_cast<int>(a[t]) + dir[t]);
        const std::uint32_t now = a[t];
        if (now == 0 || now == ctx.q - 1) {
            dir[t] = -dir[t];
            focus[t] = focus[t + 1];
            focus[t + 1] = t + 1;
        }
        acc.add(ctx.scaled[start + t][ctx.f->sub(now, old)]);
        ++count;
        best = std::min<std::uint64_t>(best, acc.weight());
        if (best == 1) break;
    }
    return {best, count};
}

template <class Accum>
DistanceResult exact_enumeration(const LinearCode& code) {
    const EnumCtx<Accum> ctx(code);
    const std::size_t k = ctx.k;

    struct Block {
        std::size_t j;
        int v;
    };
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < k; ++j) {
        // split the largest blocks on the second digit for parallel balance
        if (k - 1 - j >= 10) {
            for (std::uint32_t v = 0; v < ctx.q; ++v)
                blocks.push_back({j, static_cast<int>(v)});
        } else {
            blocks.push_back({j, -1});
        }
    }

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers =
        std::min<std::size_t>({blocks.size(), hw, 8});

    std::atomic<std::size_t> next{0};
    auto run_worker = [&]() {
        Accum acc(code.field(), code.length());
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t count = 0;
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks.size()) break;
            auto [block_best, block_count] = enumerate_block(ctx, acc, blocks[b].j,
                                                             blocks[b].v);
            best = std::min(best, block_best);
            count += block_count;
        }
        return std::make_pair(best, count);
    };

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    if (workers <= 1) {
        auto [b, c] = run_worker();
        best = b;
        total = c;
    } else {
        std::vector<std::future<std::pair<std::uint64_t, std::uint64_t>>> futs;
        for (std::size_t w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, run_worker));
        for (auto& fu : futs) {
            auto [b, c] = fu.get();
            best = std::min(best, b);
            total += c;
        }
    }

    DistanceResult res;
    res.kind = DistanceResult::Kind::exact;
    res.value = best;
    res.enumerated = total;
    return res;
}

// Information-set sweep by increasing message weight. Every codeword not
// examined after fully sweeping weight w has message weight > w, hence
// Hamming weight >= w + 1 (the generator is in RREF, so message symbols
// appear at the pivot positions).
template <class Accum>
DistanceResult sweep_enumeration(const LinearCode& code, std::uint64_t budget) {
    const EnumCtx<Accum> ctx(code);
    const std::size_t k = ctx.k;
    const std::uint32_t q = ctx.q;

    Accum acc(code.field(), code.length());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t examined = 0;
    std::uint32_t swept = 0;

    for (std::uint32_t w = 1; w <= k; ++w) {
        // level cost: C(k, w) * (q-1)^(w-1)
        std::uint64_t level = 1;
        for (std::uint32_t i = 0; i < w; ++i)
            level = sat_mul(level, k - i) / (i + 1);
        level = sat_mul(level, sat_pow(q - 1, w - 1));
        if (examined + level > budget) break;

        std::vector<std::size_t> supp(w);
        std::iota(supp.begin(), supp.end(), 0);
        bool more_supports = true;
        while (more_supports) {
            std::vector<Elem> coeff(w, 1);
            bool more_patterns = true;
            while (more_patterns) {
                acc.reset();
                for (std::uint32_t t = 0; t < w; ++t)
                    acc.add(ctx.scaled[supp[t]][coeff[t]]);
                best = std::min<std::uint64_t>(best, acc.weight());
                ++examined;
                // odometer over coeff[1..w), nonzero codes, coeff[0] pinned to 1
                more_patterns = false;
                for (std::uint32_t t = w; t-- > 1;) {
                    if (coeff[t] + 1 < q) {
                        ++coeff[t];
                        for (std::uint32_t s = t + 1; s < w; ++s) coeff[s] = 1;
                        more_patterns = true;
                        break;
                    }
                }
            }
            // next support combination
            more_supports = false;
            for (std::uint32_t t = w; t-- > 0;) {
                if (supp[t] + 1 <= k - (w - t)) {
                    ++supp[t];
                    for (std::uint32_t s = t + 1; s < w; ++s) supp[s] = supp[s - 1] + 1;
                    more_supports = true;
                    break;
                }
            }
        }
        swept = w;
        if (best <= static_cast<std::uint64_t>(w) + 1) {
            DistanceResult res;
            res.kind = DistanceResult::Kind::exact;
            res.value = best;
            res.enumerated = examined;
            res.swept_weight = swept;
            return res;
        }
    }

    DistanceResult res;
    if (swept == k) {
        res.kind = DistanceResult::Kind::exact;
        res.value = best;
    } else {
        res.kind = DistanceResult::Kind::lower_bound_only;
        res.value = std::min<std::uint64_t>(best, swept + 1);
    }
    res.enumerated = examined;
    res.swept_weight = swept;
    return res;
}

template <class Accum>
DistanceResult min_distance_impl(const LinearCode& c, std::uint64_t budget) {
    if (sat_pow(c.field().order(), c.dim()) <= budget)
        return exact_enumeration<Accum>(c);
    return sweep_enumeration<Accum>(c, budget);
}

} // namespace

DistanceResult min_distance(const LinearCode& c, std::uint64_t budget) {
    if (c.dim() == 0)
        throw param_error("minimum distance of a zero-dimensional code");
    const Field& f = c.field();
    if (f.characteristic() == 2) return min_distance_impl<BitAccum>(c, budget);
    if (f.characteristic() <= 127) return min_distance_impl<ByteAccum>(c, budget);
    return min_distance_impl<WideAccum>(c, budget);
}

} // namespace bchmp
