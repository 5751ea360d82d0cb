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
#include <variant>
#include <vector>

#include "permc3/circuit.hpp"
#include "permc3/gate.hpp"
#include "permc3/pauli.hpp"

namespace permc3 {

/// Subspaces of X- and Z-supports whose operators conjugate to Pauli
/// operators under a permutation gate: S_X = {u : pi X^u pi^-1 Pauli} and
/// S_Z = {v : pi Z^v pi^-1 Pauli}. The full group of Pauli operators that
/// conjugate into the Pauli group is exactly {i^t X^u Z^v : u in S_X,
/// v in S_Z}, by uniqueness of the permutation-diagonal split.
struct ConjugationStabilizer {
    std::vector<F2Vec> s_x;  // reduced basis
    std::vector<F2Vec> s_z;  // reduced basis
};

ConjugationStabilizer conjugation_stabilizer(const PermutationGate& pi);

/// A maximal abelian subgroup carried onto another by conjugation. The i-th
/// image generator is exactly the conjugate of the i-th group generator.
struct SemiCliffordCertificate {
    PauliSubgroup group;
    std::vector<Pauli> image_generators;
    PauliSubgroup image;
};

/// Returns a certificate when some maximal abelian subgroup conjugates into
/// the Pauli group (found as a maximal isotropic subspace of S_X + S_Z);
/// nullopt otherwise.
std::optional<SemiCliffordCertificate> semi_clifford_certificate(const PermutationGate& pi);
bool is_semi_clifford(const PermutationGate& pi);

/// A Clifford permutation nu with nu X_i nu^-1 = X^{u_i} for each given
/// independent support u_1..u_m: |v> -> |Mv> where M e_i = u_i, columns
/// extended to a basis. The conjugation identity is verified before return.
PermutationGate clifford_perm_from_x_images(uint32_t n, const std::vector<F2Vec>& images);

/// pi = left * middle * right with affine left/right and the middle given as
/// a circuit of controlled-X gates. Recomposition is verified exactly before
/// a decomposition is returned.
struct Decomposition {
    PermutationGate left;
    Circuit middle;
    PermutationGate right;
};

/// Decomposes a semi-Clifford permutation as left * mu * right with mu a
/// mismatch-free product of controlled-X gates (no repeated gate); returns
/// nullopt when the gate is not semi-Clifford.
std::optional<Decomposition> mismatch_free_decomposition(const PermutationGate& pi);

/// Minimal hierarchy level of a semi-Clifford permutation: 1 for Pauli
/// gates, 2 for Clifford, otherwise 1 + the largest control count in the
/// mismatch-free factor. nullopt when not semi-Clifford.
std::optional<uint32_t> semi_clifford_level(const PermutationGate& pi);

/// Why a staircase decomposition was refused: a generator whose conjugate is
/// not an affine permutation, or an inverse coordinate that is not of the
/// quadratic staircase shape. Either way the input is outside the third
/// level.
struct NotC3 {
    enum class Reason { kConjugateNotAffine, kCoordinateNotQuadratic };
    Reason reason;
    uint32_t index;                               // generator or coordinate, 1-based
    std::optional<PermutationGate> conjugate;     // the offending conjugate of the input
};

using StaircaseOutcome = std::variant<Decomposition, NotC3>;

/// Decomposes a third-level permutation as left * mu * right with mu a
/// product of Toffoli gates in staircase form.
StaircaseOutcome staircase_decomposition(const PermutationGate& pi);

}  // namespace permc3
