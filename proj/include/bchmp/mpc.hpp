/**************************************************************************
 * mpc.hpp
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
#include <optional>
#include <string>
#include <vector>

#include "bchmp/codes.hpp"

namespace bchmp {

/// Small dense matrix over a field; the defining matrix A of a
/// matrix-product code.
struct GfMatrix {
    const Field* f = nullptr;
    std::vector<std::vector<Elem>> a; ///< rows x cols

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }
};

std::size_t matrix_rank(const GfMatrix& m);

/// Square and upper- or lower-triangular (in the given row order).
bool is_triangular(const GfMatrix& m);

/**
 * Matrix-product code [C_1, ..., C_s]A: the code generated by the block
 * matrix (a_ij G_i). Constituents must share field and length; A must be
 * s x t with s <= t and full row rank. The result is an [nt, sum k_i] code.
 */
LinearCode matrix_product(const std::vector<LinearCode>& constituents,
                          const GfMatrix& A);

/// d(U_A(k)) for k = 1..s, where U_A(k) is the length-t code spanned by the
/// first k rows of A, each by exhaustive enumeration.
std::vector<std::uint64_t> ua_distances(const GfMatrix& A);

struct MpBound {
    std::uint64_t value = 0;
    /// Equality is guaranteed (not just a bound) for a triangular 2x2
    /// matrix with exact constituent distances; a lower-triangular matrix
    /// is evaluated in the reversed (upper-triangular) orientation, which
    /// describes the same code up to a coordinate permutation.
    bool exact = false;
    std::vector<std::uint64_t> ua; ///< d(U_A(k)) per level, original row order
};

/// min_i { d_i * d(U_A(i)) } from the constituents' distance results
/// (a lower bound when those are lower bounds; see MpBound::exact).
MpBound mp_distance_bound(const GfMatrix& A,
                          const std::vector<DistanceResult>& constituent_distances);

/**
 * Decision for the self-duality of [D, D*]A with a 2x2 matrix A under the
 * Euclidean product. The underlying test is the Gram condition
 * (a^2+b^2) GG^T = 0 and (c^2+d^2) HH^T = 0; case_id labels which of the
 * seven textual cases matched (it can be absent for accepted parameter
 * combinations the case list does not name, e.g. even q with a != b,
 * c != d and D self-dual).
 */
struct CaseDecision {
    bool accepted = false;
    std::optional<int> case_id;
    std::string detail;
    Elem mu = 0; ///< smallest square root of -1 when q = 1 (mod 4)
};

/// Requires ad != bc (throws param_error otherwise).
CaseDecision classify_self_dual_case(const Field& f, const GfMatrix& A,
                                     const DualityStatus& d_status);

struct SelfDualResult {
    LinearCode code;          ///< the [2n, n] product code
    CaseDecision decision;    ///< Euclidean classification (empty for Hermitian)
    DualityStatus verified;   ///< independent Gram verification of the output
};

/**
 * Builds [D, D*]A (Euclidean) or [D, D*^H]A (Hermitian) and certifies
 * self-duality. The Euclidean path requires the classification to accept;
 * the Hermitian path checks conjugate-Gram vanishing of the output
 * directly. A failed Euclidean verification after an accepted
 * classification is an invariant_error.
 */
SelfDualResult build_self_dual(const LinearCode& D, const GfMatrix& A, Inner inner);

} // namespace bchmp
