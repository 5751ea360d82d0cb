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
#include <utility>
#include <vector>

#include "permc3/anf.hpp"
#include "permc3/f2.hpp"
#include "permc3/pauli.hpp"

namespace permc3 {

/// Basis-state indexing: qubit 1 is the most significant bit, so the index of
/// |a_1 ... a_n> is sum a_i 2^{n-i}. This matches F2Vec's packing, so vector
/// masks and basis-state indices are interchangeable.

struct AffineForm {
    F2Matrix m;
    F2Vec w;
};

/// A permutation of the 2^n basis states, stored as its full table.
class PermutationGate {
   public:
    explicit PermutationGate(uint32_t n);  // identity
    static PermutationGate from_table(uint32_t n, std::vector<uint16_t> table);
    /// |v> -> |Mv + w>; M must be invertible.
    static PermutationGate affine(const F2Matrix& m, const F2Vec& w);
    static PermutationGate translation(const F2Vec& c);

    uint32_t qubits() const { return n_; }
    uint32_t table_size() const { return 1u << n_; }
    uint16_t apply(uint32_t index) const { return table_[index]; }
    const std::vector<uint16_t>& table() const { return table_; }

    PermutationGate operator*(const PermutationGate& other) const;  // other first, then this
    PermutationGate inverse() const;
    bool is_identity() const;

    /// ANF of the i-th output bit as a function of the input bits.
    AnfPolynomial coordinate_anf(uint32_t i) const;
    std::vector<AnfPolynomial> polynomial_representation() const;

    /// Writes the gate as |v> -> |Mv + w| if it is affine, checking every
    /// input; nullopt otherwise.
    std::optional<AffineForm> as_affine() const;

    PermutationGate extended_with_inert_qubits(uint32_t m) const;

    bool operator==(const PermutationGate&) const = default;

   private:
    uint32_t n_ = 0;
    std::vector<uint16_t> table_;
};

/// |w> -> i^t (-1)^{f(w)} |sigma(w)>: a permutation with a +-1 diagonal and a
/// global i^t phase. Closed under composition, inverse, and conjugation of
/// Pauli operators; permutation gates embed with f = 0, t = 0.
class SignedPermGate {
   public:
    explicit SignedPermGate(uint32_t n);  // identity
    explicit SignedPermGate(PermutationGate perm);
    SignedPermGate(PermutationGate perm, PackedBits sign, uint8_t t);
    static SignedPermGate from_pauli(const Pauli& p);
    /// Pure diagonal (-1)^{f(w)} from the sign polynomial's truth table.
    static SignedPermGate diagonal(uint32_t n, const PackedBits& sign);

    uint32_t qubits() const { return perm_.qubits(); }
    const PermutationGate& permutation() const { return perm_; }
    const PackedBits& sign_table() const { return sign_; }
    uint8_t phase_exponent() const { return t_; }

    SignedPermGate operator*(const SignedPermGate& other) const;  // other first, then this
    SignedPermGate inverse() const;
    /// Image index and the i^k phase exponent picked up on that basis state.
    std::pair<uint32_t, uint8_t> apply(uint32_t index) const;

    bool is_identity() const;
    bool is_permutation() const { return t_ == 0 && !sign_.any(); }
    AnfPolynomial sign_anf() const;

    /// The gate as i^t X^u Z^v if it has that shape (translation permutation,
    /// affine sign function); nullopt otherwise.
    std::optional<Pauli> as_pauli() const;

    SignedPermGate extended_with_inert_qubits(uint32_t m) const;

    bool operator==(const SignedPermGate&) const = default;

   private:
    PermutationGate perm_;
    PackedBits sign_;
    uint8_t t_ = 0;
};

/// U P U^-1, exact, with P's global phase preserved.
SignedPermGate conjugate_pauli(const SignedPermGate& u, const Pauli& p);

}  // namespace permc3
