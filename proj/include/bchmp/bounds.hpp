/**************************************************************************
 * bounds.hpp
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
#include <map>
#include <string>
#include <vector>

#include "bchmp/codes.hpp"

namespace bchmp::bounds {

/// Identifiers of the bound formulas in the built-in catalog.
enum class TheoremId {
    thm1,            ///< Euclidean dual of BCH, n = (q^m-1)/(q^s-1): d >= q^{m-st}
    thm2,            ///< Hermitian dual of BCH, n = (Q^m-1)/(Q-1): d >= Q^{m-t}+1
    lem5,            ///< coset-leader threshold behind thm1
    lem6,            ///< coset-leader threshold behind thm2
    thm3,            ///< [C, C*]A over GF(q), n = (q^m-1)/lambda
    thm4,            ///< [C*, C]A over GF(q), n = (q^m-1)/lambda
    remark_binary,   ///< binary counterpart of thm3/thm4, n = 2^m-1
    thm5,            ///< [C*, C]A, n = q^m+1, m even
    fu24_thm16,      ///< underlying dual bound used by thm5
    thm6,            ///< [.,.]A, n = (q^m-1)/(q^s-1), m+s = 2st
    thm7,            ///< Hermitian [C, C*H]A, n = Q^m-1
    thm8,            ///< Hermitian [C*H, C]A, n = Q^m-1
    thm9,            ///< Hermitian [.,.]A, n = (Q^m-1)/(Q-1)
    lem_prior_19190, ///< prior dual-distance cases, n = (q^m-1)/lambda
    lem_prior_19,    ///< prior Hermitian dual-distance cases, n = Q^m-1
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

enum class BoundClass { square_root, square_root_like, coset_leader, dual_distance };

const char* bound_class_name(BoundClass c);

/// A parameterized lower-bound claim. Parameters are validated against the
/// formula's stated ranges at construction time, never at verification.
struct BoundClaim {
    TheoremId id;
    std::map<std::string, std::int64_t> params; ///< includes derived n
    std::int64_t claimed_bound = 0;
    BoundClass cls = BoundClass::dual_distance;
    std::string detail; ///< matched case description
};

enum class VerifyStatus { verified_exact, verified_bound, inconclusive, refuted };

const char* status_name(VerifyStatus s);

struct BoundReport {
    BoundClaim claim;
    VerifyStatus status = VerifyStatus::inconclusive;
    std::string evidence;
};

/// d(C_delta^perp) >= q^{m-st} for (q^{st}-1)/(q^s-1) < delta <= ... + q^{t-1}.
BoundClaim theorem1_claim(std::int64_t q, std::int64_t s, std::int64_t m,
                          std::int64_t t, std::int64_t delta);

/// d(C_delta^perpH) >= Q^{m-t}+1, Q = q^2, n = (Q^m-1)/(Q-1). The claim also
/// records the weaker companion value Q^{m-t} under params["table_bound"].
BoundClaim theorem2_claim(std::int64_t q, std::int64_t m, std::int64_t t,
                          std::int64_t delta);

/// Coset-leader threshold checks; the report's status is verified_exact when
/// the directly computed leader exceeds the threshold, refuted otherwise.
BoundReport lemma5_threshold_check(std::int64_t q, std::int64_t s, std::int64_t t,
                                   std::int64_t m, std::int64_t u);
BoundReport lemma6_threshold_check(std::int64_t q, std::int64_t m, std::int64_t t,
                                   std::int64_t u);

/// Full sweeps over the admissible u range.
BoundReport lemma5_sweep(std::int64_t q, std::int64_t s, std::int64_t t,
                         std::int64_t m);
BoundReport lemma6_sweep(std::int64_t q, std::int64_t m, std::int64_t t);

/// Prior-work dual-distance case tables, kept for comparisons. The matching
/// case (scanned over the internal parameters; fix one with t >= 0 / s >= 0)
/// with the largest bound wins; param_error when delta fits no case.
std::int64_t prior_bound_lemma19190(std::int64_t q, std::int64_t lambda,
                                    std::int64_t m, std::int64_t delta,
                                    std::int64_t t = -1, std::int64_t s = -1,
                                    std::string* matched = nullptr);
std::int64_t prior_bound_lemma19(std::int64_t q, std::int64_t m, std::int64_t delta,
                                 std::int64_t t = -1,
                                 std::string* matched = nullptr);

/**
 * Claims for the matrix-product construction catalog (thm3..thm9,
 * remark_binary, fu24_thm16, lem_prior_*). Required params by id:
 *   thm3/thm4:        q, lambda, m, delta
 *   remark_binary:    m, delta, construction (11125 or 1112501)
 *   thm5/fu24_thm16:  q, m, delta           (q = sqrt(Q) for Hermitian ids)
 *   thm6:             q, s, t, m, delta, construction
 *   thm7/thm8:        q, m, delta
 *   thm9:             q, m, delta, construction (1125 or 112501)
 *   lem_prior_19190:  q, lambda, m, delta
 *   lem_prior_19:     q, m, delta
 * Internal case parameters (s, a, b, l) are scanned; when several cases
 * match, the largest bound is claimed and all matches are recorded.
 */
BoundClaim catalog_claim(TheoremId id, std::map<std::string, std::int64_t> params);

enum class VerifyMode { run_scan, exhaustive, both };

inline constexpr std::uint64_t kRunScanMaxLength = 100000;

/**
 * Verifies a claim against independent oracles.
 *  - thm1/thm2: run_scan rebuilds the defining set, checks the proof's
 *    consecutive range inside the dual set and its BCH bound; exhaustive
 *    additionally enumerates the dual code's exact minimum distance.
 *  - lem5/lem6: recomputes the coset leader.
 *  - catalog ids: checks the square-root(-like) comparison symbolically.
 * refuted always carries a concrete witness in the evidence.
 */
BoundReport verify_claim(const BoundClaim& claim, VerifyMode mode,
                         std::uint64_t budget = kDefaultDistanceBudget);

/// One row of the built-in bound tables (1 = Euclidean, 2 = Hermitian).
struct TableRow {
    int which = 1;
    bool analogue = false; ///< desk-scale companion row, not printed in the source table
    std::int64_t t = 0, m = 0, q = 0; ///< q is the code's field order (Q for table 2)
    std::int64_t n = 0;
    std::int64_t delta_min = 0, delta_max = 0;
    std::vector<std::int64_t> prior_bounds; ///< as printed
    std::int64_t bound = 0;          ///< as printed
    std::int64_t theorem_bound = 0;  ///< formula value (table 2 prints bound - 1)
    VerifyStatus status = VerifyStatus::inconclusive;
    std::string evidence;
};

/// Reproduces a bound table with verification per row: run_scan across the
/// whole delta range, plus an exhaustive dual-distance check where the
/// budget allows (table 1, first row).
std::vector<TableRow> reproduce_table(int which,
                                      std::uint64_t budget = kDefaultDistanceBudget);

} // namespace bchmp::bounds
