/**************************************************************************
 * test_cyclotomic.cpp
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

#include <algorithm>

#include "bchmp/cyclotomic.hpp"
#include "bchmp/errors.hpp"
#include "naive_oracles.hpp"

using namespace bchmp;
using namespace bchmp::cyclotomic;

TEST_CASE("coset orbits and leaders") {
    auto c0 = coset(0, 3, 40);
    CHECK(c0.elements == std::vector<std::uint64_t>{0});
    CHECK(c0.leader == 0);

    auto c1 = coset(1, 3, 40);
    CHECK(c1.elements == std::vector<std::uint64_t>{1, 3, 9, 27});
    CHECK(c1.leader == 1);

    auto c5 = coset(5, 3, 40);
    CHECK(c5.elements == std::vector<std::uint64_t>{5, 15});
    CHECK(c5.leader == 5);

    CHECK(coset_leader(14, 3, 40) == 2);
    CHECK(coset_leader(38, 3, 80) == 22);
    CHECK(coset_leader(272, 9, 728) == 192);
}

TEST_CASE("coset orbit matches the naive walk for every residue") {
    for (auto [q, n] : {std::pair<std::uint64_t, std::uint64_t>{3, 40}, {9, 91}, {2, 63}}) {
        for (std::uint64_t i = 0; i < n; ++i) {
            auto c = coset(i, q, n);
            auto o = naive::coset_orbit(i, q, n);
            std::sort(o.begin(), o.end());
            CHECK(c.elements == o);
            CHECK(c.leader == o.front());
        }
    }
}

TEST_CASE("non-coprime multiplier is rejected") {
    CHECK_THROWS_AS(coset(1, 2, 40), param_error);
    CHECK_THROWS_AS(coset_leader(1, 3, 39), param_error);
}

TEST_CASE("q-adic expansion round trips") {
    auto d = q_adic_expand(25, 3, 3);
    CHECK(d.digits == std::vector<std::uint32_t>{2, 2, 1});
    CHECK(q_adic_value(d) == 25);

    auto z = q_adic_expand(0, 5, 4);
    CHECK(z.digits == std::vector<std::uint32_t>{0, 0, 0, 0});

    auto m = q_adic_expand(80, 3, 4); // q^m - 1 is all digits q-1
    CHECK(m.digits == std::vector<std::uint32_t>{2, 2, 2, 2});

    CHECK_THROWS_AS(q_adic_expand(81, 3, 4), param_error);

    for (std::uint64_t v = 0; v < 81; ++v)
        CHECK(q_adic_value(q_adic_expand(v, 3, 4)) == v);
}

TEST_CASE("circular left shift multiplies by q^j mod q^m - 1") {
    auto d = q_adic_expand(25, 3, 3);
    auto s1 = circular_left_shift(d, 1);
    CHECK(s1.digits == std::vector<std::uint32_t>{2, 1, 2});
    CHECK(q_adic_value(s1) == 25 * 3 % 26);

    CHECK(circular_left_shift(d, 0).digits == d.digits);

    auto z = q_adic_expand(0, 3, 3);
    for (std::uint32_t j = 0; j < 3; ++j)
        CHECK(q_adic_value(circular_left_shift(z, j)) == 0);

    CHECK_THROWS_AS(circular_left_shift(d, 3), param_error);

    for (std::uint64_t v = 1; v < 80; ++v) {
        auto dv = q_adic_expand(v, 3, 4);
        for (std::uint32_t j = 0; j < 4; ++j) {
            std::uint64_t expect = v;
            for (std::uint32_t k = 0; k < j; ++k) expect = expect * 3 % 80;
            CHECK(q_adic_value(circular_left_shift(dv, j)) == expect);
        }
    }
}

TEST_CASE("shift criterion examples") {
    CHECK(leader_at_least(1, 1, 3, 4));
    CHECK_FALSE(leader_at_least(38, 23, 3, 4)); // leader is 22
    CHECK(leader_at_least(38, 22, 3, 4));
    CHECK_THROWS_AS(leader_at_least(0, 1, 3, 4), param_error);
    CHECK_THROWS_AS(leader_at_least(81, 1, 3, 4), param_error);
}

TEST_CASE("shift criterion agrees with the direct orbit minimum exhaustively") {
    // excludes a = q^m - 1, whose residue is 0
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 4},
                        {3, 5},
                        {5, 3},
                        {2, 6}}) {
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < m; ++i) n *= q;
        n -= 1;
        for (std::uint64_t a = 1; a < n; ++a) {
            const std::uint64_t lead = coset_leader(a, q, n);
            CHECK(leader_at_least(a, lead, q, m));
            CHECK_FALSE(leader_at_least(a, lead + 1, q, m));
        }
    }
}

TEST_CASE("divisor transfer equivalence") {
    CHECK(leader_divisor_transfer(2, 2, 3, 4));  // 2 leader mod 80, 1 leader mod 40
    CHECK(leader_divisor_transfer(13, 13, 3, 3)); // 13 mod 26 <-> 1 mod 2
    CHECK_THROWS_AS(leader_divisor_transfer(8, 8, 3, 2), param_error);  // t = q^m - 1
    CHECK_THROWS_AS(leader_divisor_transfer(3, 2, 3, 4), param_error);  // mu does not divide t
}

TEST_CASE("divisor transfer holds for every valid pair at (3,4) and (5,3)") {
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 4}, {5, 3}}) {
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < m; ++i) n *= q;
        n -= 1;
        for (std::uint64_t t = 1; t < n; ++t)
            for (std::uint64_t mu = 1; mu <= t; ++mu)
                if (t % mu == 0 && n % mu == 0)
                    CHECK_NOTHROW(leader_divisor_transfer(t, mu, q, m));
    }
}
