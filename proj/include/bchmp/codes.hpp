/**************************************************************************
 * codes.hpp
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
#include <vector>

#include "bchmp/gf.hpp"

namespace bchmp {

/**
 * Linear code over GF(q), held as a generator matrix in reduced row-echelon
 * form. Canonicalization makes structural equality of codes plain matrix
 * equality. Immutable after construction.
 */
class LinearCode {
public:
    /// Canonicalizes the given spanning rows (they need not be independent).
    LinearCode(const Field& f, std::size_t n,
               std::vector<std::vector<Elem>> spanning_rows);

    static LinearCode zero(const Field& f, std::size_t n);
    static LinearCode full(const Field& f, std::size_t n);

    const Field& field() const { return *f_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return rows_.size(); }

    /// RREF generator matrix, dim() rows of length().
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }

    bool operator==(const LinearCode& o) const {
        return f_ == o.f_ && n_ == o.n_ && rows_ == o.rows_;
    }

    /// Membership of a single word.
    bool contains(const std::vector<Elem>& word) const;
    /// Subcode test: every generator of `sub` lies in this code.
    bool contains(const LinearCode& sub) const;

private:
    const Field* f_;
    std::size_t n_;
    std::vector<std::vector<Elem>> rows_;
};

enum class Inner { euclidean, hermitian };

/// Euclidean dual; dim = n - k, involutive on canonical forms.
LinearCode dual(const LinearCode& c);

/// Hermitian dual over GF(q0^2): the Euclidean dual of the entrywise
/// Frobenius-conjugated code. Throws param_error if the field order is not
/// a square.
LinearCode hermitian_dual(const LinearCode& c);

struct DualityStatus {
    bool self_orthogonal = false; ///< C subset of C*
    bool dual_containing = false; ///< C* subset of C
    bool self_dual = false;       ///< C = C*
};

/// Gram-matrix + dimension classification under the chosen inner product.
DualityStatus self_duality_status(const LinearCode& c, Inner inner);

struct DistanceResult {
    enum class Kind { exact, lower_bound_only };
    Kind kind = Kind::exact;
    std::uint64_t value = 0;      ///< minimum weight, or certified lower bound
    std::uint64_t enumerated = 0; ///< codewords examined
    /// For lower_bound_only: the largest message weight fully swept; every
    /// unexamined codeword has weight >= swept_weight + 1.
    std::uint32_t swept_weight = 0;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 1ull << 24;

/**
 * Minimum-distance oracle. If q^k <= budget the full message space is
 * enumerated (up to scalar multiples) and the result is exact; otherwise an
 * information-set sweep by increasing message weight yields either a
 * certified exact value or a certified lower bound. Throws param_error for
 * k = 0.
 */
DistanceResult min_distance(const LinearCode& c,
                            std::uint64_t budget = kDefaultDistanceBudget);

} // namespace bchmp
