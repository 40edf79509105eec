/**************************************************************************
 * test_codes.cpp
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

#include <doctest.h>

#include <random>

#include "bchmp/codes.hpp"
#include "bchmp/kernels.hpp"
#include "naive_oracles.hpp"

using namespace bchmp;

namespace {

LinearCode hamming74() {
    const Field& f2 = Field::get(2, 1);
    return LinearCode(f2, 7,
                      {{1, 0, 0, 0, 1, 1, 0},
                       {0, 1, 0, 0, 1, 0, 1},
                       {0, 0, 1, 0, 0, 1, 1},
                       {0, 0, 0, 1, 1, 1, 1}});
}

LinearCode tetracode() {
    const Field& f3 = Field::get(3, 1);
    return LinearCode(f3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
}

} // namespace

TEST_CASE("RREF canonicalization makes equal codes equal matrices") {
    const Field& f3 = Field::get(3, 1);
    LinearCode a(f3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    LinearCode b(f3, 4, {{2, 1, 0, 1}, {0, 2, 2, 1}, {1, 1, 2, 0}}); // same row space
    CHECK(a.dim() == 2);
    CHECK(b.dim() == 2);
    CHECK(a == b);
}

TEST_CASE("dual of the full space is the zero code and vice versa") {
    const Field& f5 = Field::get(5, 1);
    LinearCode full = LinearCode::full(f5, 4);
    LinearCode z = dual(full);
    CHECK(z.dim() == 0);
    CHECK(dual(z) == full);
}

TEST_CASE("Hamming dual is the simplex code with distance 4") {
    LinearCode h = hamming74();
    LinearCode s = dual(h);
    CHECK(s.dim() == 3);
    CHECK(naive::min_distance(s) == 4);
    CHECK(min_distance(s).value == 4);
    CHECK(dual(s) == h);
}

TEST_CASE("dual rows are orthogonal to code rows") {
    std::mt19937 rng(31);
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
        const Field& f = Field::get(p, e);
        for (int it = 0; it < 10; ++it) {
            LinearCode c = naive::random_code(f, 6, 3, rng);
            LinearCode d = dual(c);
            CHECK(c.dim() + d.dim() == 6);
            for (const auto& a : c.rows())
                for (const auto& b : d.rows()) CHECK(naive::dot(f, a, b) == 0);
            CHECK(dual(d) == c);
        }
    }
}

TEST_CASE("hermitian dual over GF(9), length 1") {
    const Field& f9 = Field::get(3, 2);
    LinearCode one(f9, 1, {{1}});
    LinearCode hd = hermitian_dual(one);
    CHECK(hd.dim() == 0);
    CHECK(hermitian_dual(LinearCode::zero(f9, 1)) == LinearCode::full(f9, 1));
}

TEST_CASE("hermitian dual words pair to zero under the conjugate product") {
    const Field& f9 = Field::get(3, 2);
    std::mt19937 rng(32);
    for (int it = 0; it < 10; ++it) {
        LinearCode c = naive::random_code(f9, 5, 2, rng);
        LinearCode d = hermitian_dual(c);
        CHECK(c.dim() + d.dim() == 5);
        for (const auto& a : d.rows())
            for (const auto& b : c.rows()) CHECK(naive::dot_h(f9, 3, a, b) == 0);
        CHECK(hermitian_dual(d) == c);
    }
    CHECK_THROWS_AS(hermitian_dual(naive::random_code(Field::get(3, 1), 4, 2, rng)),
                    param_error);
}

TEST_CASE("min distance of the repetition code is n") {
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {5, 1}}) {
        const Field& f = Field::get(p, e);
        LinearCode rep(f, 6, {{1, 1, 1, 1, 1, 1}});
        DistanceResult r = min_distance(rep);
        CHECK(r.kind == DistanceResult::Kind::exact);
        CHECK(r.value == 6);
    }
}

TEST_CASE("Hamming [7,4] has distance 3") {
    DistanceResult r = min_distance(hamming74());
    CHECK(r.kind == DistanceResult::Kind::exact);
    CHECK(r.value == 3);
    CHECK(r.enumerated == 15); // (2^4 - 1) / (2 - 1)
}

TEST_CASE("(u|u+v) of Hamming and simplex has distance 4") {
    LinearCode h = hamming74();
    LinearCode s = dual(h);
    // block construction by hand: rows (g | g) for g in H, (0 | g) for g in S
    std::vector<std::vector<Elem>> rows;
    for (const auto& g : h.rows()) {
        std::vector<Elem> r(14);
        for (int i = 0; i < 7; ++i) r[i] = r[i + 7] = g[i];
        rows.push_back(r);
    }
    for (const auto& g : s.rows()) {
        std::vector<Elem> r(14, 0);
        for (int i = 0; i < 7; ++i) r[i + 7] = g[i];
        rows.push_back(r);
    }
    LinearCode c(Field::get(2, 1), 14, rows);
    CHECK(c.dim() == 7);
    DistanceResult r = min_distance(c);
    CHECK(r.kind == DistanceResult::Kind::exact);
    CHECK(r.value == 4);
    CHECK(naive::min_distance(c) == 4);
}

TEST_CASE("min distance matches the naive oracle on random codes") {
    std::mt19937 rng(33);
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                        {2, 2},
                        {3, 1},
                        {3, 2},
                        {5, 1},
                        {13, 1}}) {
        const Field& f = Field::get(p, e);
        for (int it = 0; it < 8; ++it) {
            LinearCode c = naive::random_code(f, 8, 3, rng);
            if (c.dim() == 0) continue;
            DistanceResult r = min_distance(c);
            CHECK(r.kind == DistanceResult::Kind::exact);
            CHECK(r.value == naive::min_distance(c));
        }
    }
}

TEST_CASE("kernel implementations give identical distances") {
    std::mt19937 rng(34);
    const Field& f3 = Field::get(3, 1);
    LinearCode c = naive::random_code(f3, 12, 5, rng);
    kernels::force_implementation("scalar");
    DistanceResult scalar = min_distance(c);
    std::uint64_t expect = scalar.value;
    for (const char* const* name = kernels::available_implementations(); *name; ++name) {
        kernels::force_implementation(*name);
        DistanceResult r = min_distance(c);
        CHECK(r.value == expect);
        CHECK(r.enumerated == scalar.enumerated);
    }
    kernels::force_implementation("auto");
}

TEST_CASE("wide-symbol fallback for large characteristics") {
    const Field& f = Field::get(131, 1);
    LinearCode c(f, 4, {{1, 130, 0, 5}, {0, 1, 7, 2}});
    DistanceResult r = min_distance(c);
    CHECK(r.kind == DistanceResult::Kind::exact);
    CHECK(r.value == naive::min_distance(c));
}

TEST_CASE("zero-dimensional distance is rejected") {
    CHECK_THROWS_AS(min_distance(LinearCode::zero(Field::get(2, 1), 4)), param_error);
}

TEST_CASE("budgeted sweep certifies a lower bound") {
    // [24, 12] random ternary code: 3^12 messages exceed a budget of 1000,
    // so the information-set sweep must certify d >= swept + 1
    std::mt19937 rng(35);
    const Field& f3 = Field::get(3, 1);
    LinearCode c = naive::random_code(f3, 24, 12, rng);
    REQUIRE(c.dim() == 12);
    DistanceResult r = min_distance(c, 1000);
    const std::uint64_t truth = naive::min_distance(c);
    if (r.kind == DistanceResult::Kind::exact) {
        CHECK(r.value == truth);
    } else {
        CHECK(r.value <= truth);
        CHECK(r.value == r.swept_weight + 1);
        CHECK(r.enumerated <= 1000);
    }
}

TEST_CASE("sweep early-exact on a low-distance code inside a huge message space") {
    // 30 dimensions of mostly-identity rows: a weight-1 codeword is found at
    // sweep level 1, certifying exactness without full enumeration
    const Field& f3 = Field::get(3, 1);
    std::vector<std::vector<Elem>> rows(30, std::vector<Elem>(31, 0));
    for (int i = 0; i < 30; ++i) rows[i][i] = 1;
    rows[0][30] = 1; // row 0 has weight 2
    LinearCode c(f3, 31, rows);
    DistanceResult r = min_distance(c, 1 << 16);
    CHECK(r.kind == DistanceResult::Kind::exact);
    CHECK(r.value == 1); // row 1 alone is a weight-1 codeword
}

TEST_CASE("duality statuses") {
    LinearCode h = hamming74();
    DualityStatus sh = self_duality_status(h, Inner::euclidean);
    CHECK(sh.dual_containing);
    CHECK_FALSE(sh.self_orthogonal);
    CHECK_FALSE(sh.self_dual);

    DualityStatus ss = self_duality_status(dual(h), Inner::euclidean);
    CHECK(ss.self_orthogonal);
    CHECK_FALSE(ss.dual_containing);

    DualityStatus st = self_duality_status(tetracode(), Inner::euclidean);
    CHECK(st.self_dual);
    CHECK(st.self_orthogonal);
    CHECK(st.dual_containing);

    DualityStatus sz =
        self_duality_status(LinearCode::zero(Field::get(3, 1), 4), Inner::euclidean);
    CHECK(sz.self_orthogonal);
    CHECK_FALSE(sz.self_dual);
}

TEST_CASE("hermitian self-dual example over GF(9)") {
    const Field& f9 = Field::get(3, 2);
    // (1, g) with 1 + g^4 = 0: g^4 = -1 for the order-8 generator
    LinearCode c(f9, 2, {{1, f9.generator()}});
    DualityStatus s = self_duality_status(c, Inner::hermitian);
    CHECK(s.self_dual);
}

TEST_CASE("membership testing") {
    LinearCode h = hamming74();
    CHECK(h.contains(std::vector<Elem>{0, 0, 0, 0, 0, 0, 0}));
    CHECK(h.contains(h.rows()[2]));
    CHECK_FALSE(h.contains(std::vector<Elem>{1, 0, 0, 0, 0, 0, 0}));
    CHECK(h.contains(dual(h))); // dual-containing
}
