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

#include "permc3/gate.hpp"

namespace permc3 {

/// A signed permutation gate is a Pauli operator exactly when its permutation
/// is a translation and its sign function is affine.
bool is_pauli_gate(const SignedPermGate& u);

/// Clifford test for signed permutation gates: the permutation is affine and
/// the sign polynomial has degree at most 2.
bool is_clifford_gate(const SignedPermGate& u);

struct C3Witness {
    Pauli generator;          // first failing generator, order X1..Xn, Z1..Zn
    SignedPermGate conjugate; // U g U^-1, which fails the Clifford test
};

struct C3Result {
    bool in_c3 = false;
    std::optional<C3Witness> witness;
};

/// Third-level test by conjugating the 2n Pauli generators; sufficient
/// because the Clifford group is closed under products.
C3Result c3_membership(const SignedPermGate& u);
bool is_c3_gate(const SignedPermGate& u);

/// Membership in the k-th hierarchy level. Levels 1 and 2 are the Pauli and
/// Clifford tests; level 3 uses the generator check; levels >= 4 enumerate
/// all 4^n Pauli operators up to phase and recurse, since the level below is
/// not closed under products. Throws DimensionTooLarge when the enumeration
/// cost is out of reach (4^{n(k-3)} conjugations).
bool is_in_level(const SignedPermGate& u, uint32_t k);

/// Minimal level of the +-1 diagonal gate built from f: its degree, with 0
/// meaning a global sign.
uint32_t diagonal_level(const AnfPolynomial& f);

}  // namespace permc3
