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
#include <vector>

#include "permc3/circuit.hpp"
#include "permc3/gate.hpp"

namespace permc3 {

/// Exact real operator E / sqrt(2)^s with an integer matrix E and a
/// nonnegative scale exponent s. All arithmetic is overflow-checked. The
/// canonical form divides out common factors of 2 while s >= 2, which makes
/// exact equality a plain field comparison. This is the only representation
/// here that can hold Hadamards.
class ScaledIntMatrix {
   public:
    static ScaledIntMatrix identity(uint32_t dim);
    /// Exact product of the circuit's gate matrices; n <= 7. Asserts
    /// unitarity of the result.
    static ScaledIntMatrix from_circuit(const Circuit& c);
    static ScaledIntMatrix from_signed_perm(const SignedPermGate& u);  // requires a real phase
    /// The matrix of X^u Z^v (the phase is not representable; track it apart).
    static ScaledIntMatrix pauli_matrix(const F2Vec& u, const F2Vec& v);

    uint32_t dim() const { return dim_; }
    int scale() const { return scale_; }
    int64_t at(uint32_t r, uint32_t c) const { return data_[static_cast<size_t>(r) * dim_ + c]; }

    ScaledIntMatrix operator*(const ScaledIntMatrix& other) const;
    ScaledIntMatrix negated() const;
    /// Transpose with the same scale; equals the inverse for unitary inputs.
    ScaledIntMatrix transpose() const;
    ScaledIntMatrix inverse() const;  // requires unitarity

    bool is_unitary() const;  // E E^T == 2^s I
    bool equals_exact(const ScaledIntMatrix& other) const;
    bool equals_up_to_sign(const ScaledIntMatrix& other) const;

    /// Divides out common factors of 2 while s >= 2. Idempotent.
    void canonicalize();

   private:
    ScaledIntMatrix(uint32_t dim, int scale);

    uint32_t dim_ = 0;
    int scale_ = 0;
    std::vector<int64_t> data_;
};

/// Brute-force hierarchy oracles on exact matrices. Real matrices only, so
/// the Pauli detector matches +-X^u Z^v patterns.
bool dense_is_pauli(const ScaledIntMatrix& m);
bool dense_is_clifford(const ScaledIntMatrix& m);  // dim <= 32
bool dense_is_c3(const ScaledIntMatrix& m);        // dim <= 16

}  // namespace permc3
