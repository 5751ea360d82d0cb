// Copyright 2026 The permc3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "permc3/errors.hpp"

namespace permc3 {

/// Hard cap on ambient dimension; keeps 2^n truth tables and single-word
/// bit packing desk-sized.
inline constexpr uint32_t kMaxDimension = 16;

/// A vector over F_2 of length n <= 16.
///
/// Component i (1-based) is stored at bit position n-i, so the packed mask of
/// a vector equals the basis-state index it labels: qubit 1 is the top bit.
class F2Vec {
   public:
    F2Vec() = default;
    explicit F2Vec(uint32_t n);
    static F2Vec from_mask(uint32_t n, uint32_t mask);
    static F2Vec unit(uint32_t n, uint32_t i);

    uint32_t size() const { return n_; }
    uint32_t mask() const { return bits_; }
    bool get(uint32_t i) const;
    F2Vec& set(uint32_t i, bool value);

    bool is_zero() const { return bits_ == 0; }
    uint32_t weight() const;
    /// Index of the first nonzero component; n+1 when the vector is zero.
    uint32_t alpha() const;
    /// Standard bilinear form: parity of the componentwise AND.
    bool dot(const F2Vec& other) const;

    F2Vec operator+(const F2Vec& other) const;
    F2Vec& operator+=(const F2Vec& other);
    bool operator==(const F2Vec&) const = default;

    std::string to_string() const;

   private:
    uint32_t bits_ = 0;
    uint32_t n_ = 0;
};

uint32_t alpha(const F2Vec& v);

/// A rectangular matrix over F_2 stored as rows.
class F2Matrix {
   public:
    F2Matrix() = default;
    F2Matrix(uint32_t rows, uint32_t cols);
    static F2Matrix identity(uint32_t n);
    static F2Matrix from_rows(std::vector<F2Vec> rows);
    static F2Matrix from_columns(uint32_t rows, const std::vector<F2Vec>& cols);

    uint32_t rows() const { return rows_n_; }
    uint32_t cols() const { return cols_n_; }
    bool get(uint32_t i, uint32_t j) const;
    F2Matrix& set(uint32_t i, uint32_t j, bool value);
    const F2Vec& row(uint32_t i) const;
    F2Vec column(uint32_t j) const;

    F2Vec apply(const F2Vec& v) const;
    F2Matrix operator*(const F2Matrix& other) const;
    F2Matrix operator+(const F2Matrix& other) const;
    F2Matrix transpose() const;

    uint32_t rank() const;
    std::optional<F2Matrix> inverse() const;
    bool is_zero() const;
    /// Entry (i, j) is zero whenever i <= j.
    bool is_strictly_lower_triangular() const;

    bool operator==(const F2Matrix&) const = default;
    std::string to_string() const;

   private:
    uint32_t rows_n_ = 0;
    uint32_t cols_n_ = 0;
    std::vector<F2Vec> rows_;
};

/// Basis of the intersection of the kernels of the given square matrices,
/// computed by Gaussian elimination on the vertically stacked matrices.
/// Deterministic: basis vectors are emitted in ascending free-column order.
std::vector<F2Vec> kernel_intersection(const std::vector<F2Matrix>& mats);

/// Given pairwise commuting square matrices with A^2 = 0 (checked), returns
/// an invertible M such that M * A * M^-1 is strictly lower triangular for
/// every A in the family.
F2Matrix simultaneous_strict_lower_triangularize(const std::vector<F2Matrix>& mats);

struct TransformOp {
    enum class Kind { kSwap, kCompose };
    Kind kind;
    uint32_t i;  // 1-based slot indices
    uint32_t j;
};

/// Result of a successful twisted elimination run. Replaying `ops` over the
/// initial pairs reproduces the final state with b_i = e_i for all i;
/// `basis[i-1]` expresses the final slot i as a combination of the original
/// generators and the basis vectors are linearly independent.
struct TransformRecord {
    std::vector<TransformOp> ops;
    std::vector<F2Vec> basis;
};

struct TwistedPair {
    F2Matrix a;
    F2Vec b;
};

struct ZeroVectorReached {
    uint32_t index;  // 1-based slot whose b became zero
};

using TwistedEliminationResult = std::variant<TransformRecord, ZeroVectorReached>;

/// Two-phase elimination over pairs (A_i, b_i) with A_i strictly lower
/// triangular. Swap exchanges two slots; Compose(i, j) updates slot i to
/// (A_i + A_j + A_i A_j, b_i + b_j + A_i b_j). Phase 1 composes the first
/// colliding pair (equal alpha, ascending scan) until all alpha(b_i) are
/// distinct, then sorts by swaps; phase 2 row-reduces each b_i to e_i.
/// Returns the record, or the first slot whose b becomes zero.
TwistedEliminationResult twisted_gaussian_elimination(std::vector<TwistedPair> pairs);

/// Applies Swap/Compose operations in order to `pairs`, using the same update
/// rule as twisted_gaussian_elimination. Intended for replay checks.
void apply_transform_ops(std::span<const TransformOp> ops, std::vector<TwistedPair>& pairs);

}  // namespace permc3
