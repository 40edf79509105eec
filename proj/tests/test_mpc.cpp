/**************************************************************************
 * test_mpc.cpp
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

#include "bchmp/mpc.hpp"
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

GfMatrix mat2(const Field& f, Elem a, Elem b, Elem c, Elem d) {
    return GfMatrix{&f, {{a, b}, {c, d}}};
}

} // namespace

TEST_CASE("identity 1x1 leaves the constituent unchanged") {
    LinearCode h = hamming74();
    GfMatrix a{&h.field(), {{1}}};
    CHECK(matrix_product({h}, a) == h);
}

TEST_CASE("(u|u+v) assembles a [14, 7] code") {
    const Field& f2 = Field::get(2, 1);
    LinearCode h = hamming74();
    LinearCode s = dual(h);
    LinearCode c = matrix_product({h, s}, mat2(f2, 1, 1, 0, 1));
    CHECK(c.length() == 14);
    CHECK(c.dim() == 7);
}

TEST_CASE("dimension adds for a nonsingular square matrix") {
    const Field& f5 = Field::get(5, 1);
    std::mt19937 rng(41);
    LinearCode c1 = naive::random_code(f5, 5, 2, rng);
    LinearCode c2 = naive::random_code(f5, 5, 3, rng);
    LinearCode c = matrix_product({c1, c2}, mat2(f5, 1, 1, 1, 4)); // det = 4 - 1 = 3
    CHECK(c.length() == 10);
    CHECK(c.dim() == c1.dim() + c2.dim());
}

TEST_CASE("matrix validation") {
    const Field& f2 = Field::get(2, 1);
    LinearCode h = hamming74();
    CHECK_THROWS_AS(matrix_product({h, dual(h)}, mat2(f2, 1, 1, 1, 1)), param_error);
    CHECK_THROWS_AS(matrix_product({h}, mat2(f2, 1, 1, 0, 1)), param_error);
    GfMatrix tall{&f2, {{1}, {1}}};
    CHECK_THROWS_AS(matrix_product({h, dual(h)}, tall), param_error);
    CHECK_THROWS_AS(matrix_product({h, tetracode()}, mat2(f2, 1, 1, 0, 1)), param_error);
}

TEST_CASE("ua distances") {
    const Field& f2 = Field::get(2, 1);
    CHECK(ua_distances(mat2(f2, 1, 1, 0, 1)) == std::vector<std::uint64_t>{2, 1});

    const Field& f5 = Field::get(5, 1);
    CHECK(ua_distances(mat2(f5, 2, 1, 3, 1)) == std::vector<std::uint64_t>{2, 1});

    GfMatrix id3{&f5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(ua_distances(id3) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("matrix-product distance bound with triangular exactness") {
    const Field& f2 = Field::get(2, 1);
    LinearCode h = hamming74();
    LinearCode s = dual(h);
    auto dh = min_distance(h);
    auto ds = min_distance(s);
    MpBound b = mp_distance_bound(mat2(f2, 1, 1, 0, 1), {dh, ds});
    CHECK(b.value == 4); // min{3*2, 4*1}
    CHECK(b.exact);
    LinearCode c = matrix_product({h, s}, mat2(f2, 1, 1, 0, 1));
    CHECK(min_distance(c).value == 4);
}

TEST_CASE("triangularity detection") {
    const Field& f5 = Field::get(5, 1);
    CHECK(is_triangular(mat2(f5, 1, 1, 0, 1)));
    CHECK(is_triangular(mat2(f5, 1, 0, 3, 1)));
    CHECK(is_triangular(mat2(f5, 1, 0, 0, 1)));
    CHECK_FALSE(is_triangular(mat2(f5, 2, 1, 3, 1)));
    GfMatrix wide{&f5, {{1, 0, 0}, {0, 1, 0}}};
    CHECK_FALSE(is_triangular(wide));
}

TEST_CASE("row scaling preserves parameters and ua distances") {
    const Field& f5 = Field::get(5, 1);
    std::mt19937 rng(42);
    LinearCode c1 = naive::random_code(f5, 4, 2, rng);
    LinearCode c2 = naive::random_code(f5, 4, 2, rng);
    GfMatrix a = mat2(f5, 2, 1, 3, 1);
    GfMatrix scaled = mat2(f5, f5.mul(3, 2), f5.mul(3, 1), f5.mul(2, 3), f5.mul(2, 1));
    CHECK(ua_distances(a) == ua_distances(scaled));
    LinearCode pa = matrix_product({c1, c2}, a);
    LinearCode pb = matrix_product({c1, c2}, scaled);
    CHECK(pa.length() == pb.length());
    CHECK(pa.dim() == pb.dim());
    CHECK(min_distance(pa).value == min_distance(pb).value);
}

TEST_CASE("classification against the Gram conditions, all seven cases") {
    // case 1: even q, a = b, c != d, D dual-containing
    {
        const Field& f2 = Field::get(2, 1);
        auto dec = classify_self_dual_case(f2, mat2(f2, 1, 1, 0, 1),
                                           self_duality_status(hamming74(), Inner::euclidean));
        CHECK(dec.accepted);
        CHECK(dec.case_id == 1);
    }
    // case 2: even q, c = d, a != b, D self-orthogonal
    {
        const Field& f2 = Field::get(2, 1);
        auto dec = classify_self_dual_case(
            f2, mat2(f2, 1, 0, 1, 1),
            self_duality_status(dual(hamming74()), Inner::euclidean));
        CHECK(dec.accepted);
        CHECK(dec.case_id == 2);
    }
    // case 3: q = 3 (mod 4), D self-dual
    {
        const Field& f3 = Field::get(3, 1);
        auto dec = classify_self_dual_case(f3, mat2(f3, 1, 0, 0, 1),
                                           self_duality_status(tetracode(), Inner::euclidean));
        CHECK(dec.accepted);
        CHECK(dec.case_id == 3);
    }
    // cases 4-7: q = 5, mu = 2
    {
        const Field& f5 = Field::get(5, 1);
        LinearCode sd(f5, 4, {{1, 2, 0, 0}, {0, 0, 1, 2}});          // self-dual
        LinearCode so(f5, 4, {{1, 2, 0, 0}});                        // self-orthogonal
        LinearCode dc(f5, 4, {{1, 2, 0, 0}, {0, 0, 1, 2}, {0, 1, 0, 0}}); // dual-containing
        LinearCode plain(f5, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});       // nothing special

        auto c4 = classify_self_dual_case(f5, mat2(f5, 2, 1, 3, 1),
                                          self_duality_status(plain, Inner::euclidean));
        CHECK(c4.accepted);
        CHECK(c4.case_id == 4);
        CHECK(c4.mu == 2);

        auto c5 = classify_self_dual_case(f5, mat2(f5, 2, 1, 0, 1),
                                          self_duality_status(dc, Inner::euclidean));
        CHECK(c5.accepted);
        CHECK(c5.case_id == 5);

        auto c6 = classify_self_dual_case(f5, mat2(f5, 1, 0, 3, 4),
                                          self_duality_status(so, Inner::euclidean));
        CHECK(c6.accepted);
        CHECK(c6.case_id == 6);

        auto c7 = classify_self_dual_case(f5, mat2(f5, 1, 0, 0, 1),
                                          self_duality_status(sd, Inner::euclidean));
        CHECK(c7.accepted);
        CHECK(c7.case_id == 7);

        // rejections name the failing Gram condition
        auto rej = classify_self_dual_case(f5, mat2(f5, 1, 0, 0, 1),
                                           self_duality_status(plain, Inner::euclidean));
        CHECK_FALSE(rej.accepted);
        CHECK(rej.detail.find("self-orthogonal") != std::string::npos);

        CHECK_THROWS_AS(classify_self_dual_case(
                            f5, mat2(f5, 2, 1, 2, 1),
                            self_duality_status(plain, Inner::euclidean)),
                        param_error);
    }
}

TEST_CASE("even q with a != b, c != d needs a self-dual D and has no listed case") {
    const Field& f2 = Field::get(2, 1);
    LinearCode d(f2, 2, {{1, 1}}); // self-dual over GF(2)
    auto dec = classify_self_dual_case(f2, mat2(f2, 1, 0, 0, 1),
                                       self_duality_status(d, Inner::euclidean));
    CHECK(dec.accepted);
    CHECK_FALSE(dec.case_id.has_value());
}

TEST_CASE("build_self_dual certifies its output") {
    // [14, 7, 4] from the Hamming code
    {
        const Field& f2 = Field::get(2, 1);
        SelfDualResult r = build_self_dual(hamming74(), mat2(f2, 1, 1, 0, 1),
                                           Inner::euclidean);
        CHECK(r.code.length() == 14);
        CHECK(r.code.dim() == 7);
        CHECK(r.verified.self_dual);
        CHECK(min_distance(r.code).value == 4);
    }
    // [8, 4] ternary from the tetracode
    {
        const Field& f3 = Field::get(3, 1);
        SelfDualResult r = build_self_dual(tetracode(), mat2(f3, 1, 0, 0, 1),
                                           Inner::euclidean);
        CHECK(r.code.length() == 8);
        CHECK(r.code.dim() == 4);
        CHECK(r.verified.self_dual);
    }
    // rejection surfaces as a parameter error
    {
        const Field& f5 = Field::get(5, 1);
        LinearCode plain(f5, 4, {{1, 0, 0, 0}});
        CHECK_THROWS_AS(build_self_dual(plain, mat2(f5, 1, 0, 0, 1), Inner::euclidean),
                        param_error);
    }
}

TEST_CASE("case 4 needs no property of D: 20 random codes over GF(5)") {
    const Field& f5 = Field::get(5, 1);
    std::mt19937 rng(43);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 2 + rng() % 5;
        const std::size_t k = 1 + rng() % n;
        LinearCode d = naive::random_code(f5, n, k, rng);
        SelfDualResult r = build_self_dual(d, mat2(f5, 2, 1, 3, 1), Inner::euclidean);
        CHECK(r.verified.self_dual);
        CHECK(r.code.dim() == n);
        CHECK(r.decision.case_id == 4);
    }
}

TEST_CASE("all seven cases yield verified self-dual codes across small fields") {
    // GF(4) for the even-q cases, GF(13) for q = 1 (mod 4)
    {
        const Field& f4 = Field::get(2, 2);
        LinearCode d(f4, 2, {{1, 1}}); // Euclidean self-dual over GF(4)
        auto r1 = build_self_dual(d, mat2(f4, 1, 1, 0, 1), Inner::euclidean);
        CHECK(r1.verified.self_dual);
        CHECK(r1.decision.case_id == 1);
        auto r2 = build_self_dual(d, mat2(f4, 1, 0, 1, 1), Inner::euclidean);
        CHECK(r2.verified.self_dual);
        CHECK(r2.decision.case_id == 2);
    }
    {
        const Field& f13 = Field::get(13, 1);
        LinearCode sd(f13, 2, {{1, 5}}); // 1 + 25 = 26 = 0 (mod 13)
        CHECK(self_duality_status(sd, Inner::euclidean).self_dual);
        auto r4 = build_self_dual(sd, mat2(f13, 5, 1, 8, 1), Inner::euclidean);
        CHECK(r4.verified.self_dual);
        CHECK(r4.decision.case_id == 4);
        auto r7 = build_self_dual(sd, mat2(f13, 1, 0, 0, 1), Inner::euclidean);
        CHECK(r7.verified.self_dual);
        CHECK(r7.decision.case_id == 7);
    }
}

TEST_CASE("hermitian construction verifies by conjugate Gram directly") {
    const Field& f4 = Field::get(2, 2);
    LinearCode d(f4, 2, {{1, 1}}); // Hermitian self-dual: 1*1^2 + 1*1^2 = 0
    SelfDualResult r = build_self_dual(d, mat2(f4, 1, 1, 0, 1), Inner::hermitian);
    CHECK(r.code.length() == 4);
    CHECK(r.code.dim() == 2);
    CHECK(r.verified.self_dual);

    const Field& f9 = Field::get(3, 2);
    LinearCode d9(f9, 2, {{1, f9.generator()}});
    SelfDualResult r9 = build_self_dual(d9, mat2(f9, 1, 0, 0, 1), Inner::hermitian);
    CHECK(r9.verified.self_dual);

    // a pair that fails the conjugate-Gram check is a parameter error
    LinearCode plain9(f9, 2, {{1, 0}});
    CHECK_THROWS_AS(build_self_dual(plain9, mat2(f9, 1, 0, 0, 1), Inner::hermitian),
                    param_error);
}

TEST_CASE("triangular equality on random fixtures") {
    std::mt19937 rng(44);
    for (int it = 0; it < 10; ++it) {
        const std::uint32_t qs[] = {2, 3, 5};
        const Field& f = Field::get(qs[it % 3], 1);
        std::uniform_int_distribution<Elem> nz(1, f.order() - 1);
        std::uniform_int_distribution<Elem> any(0, f.order() - 1);
        const bool upper = rng() % 2 == 0;
        GfMatrix a = upper ? mat2(f, nz(rng), any(rng), 0, nz(rng))
                           : mat2(f, nz(rng), 0, any(rng), nz(rng));
        const std::size_t n = 4 + rng() % 4;
        LinearCode c1 = naive::random_code(f, n, 1 + rng() % 3, rng);
        LinearCode c2 = naive::random_code(f, n, 1 + rng() % 3, rng);
        if (c1.dim() == 0 || c2.dim() == 0) continue;
        auto d1 = min_distance(c1);
        auto d2 = min_distance(c2);
        MpBound b = mp_distance_bound(a, {d1, d2});
        CHECK(b.exact);
        LinearCode prod = matrix_product({c1, c2}, a);
        CHECK(min_distance(prod).value == b.value);
    }
}
