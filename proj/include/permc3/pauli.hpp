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
#include <string>
#include <vector>

#include "permc3/f2.hpp"

namespace permc3 {

/// The operator i^t X^u Z^v with the phase exponent tracked mod 4.
///
/// Convention: the X factor is written to the left of the Z factor, so
/// Y = i X Z has u = v = 1, t = 1. Subgroup comparisons elsewhere are
/// phase-blind, so the choice is not observable in certificates.
class Pauli {
   public:
    explicit Pauli(uint32_t n);  // identity
    Pauli(uint8_t t, F2Vec u, F2Vec v);
    static Pauli x(uint32_t n, uint32_t i);
    static Pauli y(uint32_t n, uint32_t i);
    static Pauli z(uint32_t n, uint32_t i);
    /// X on every qubit in `u`, Z on every qubit in `v`, phase +1.
    static Pauli from_support(const F2Vec& u, const F2Vec& v);

    uint32_t size() const { return u_.size(); }
    uint8_t phase_exponent() const { return t_; }
    const F2Vec& x_part() const { return u_; }
    const F2Vec& z_part() const { return v_; }

    Pauli operator*(const Pauli& other) const;
    Pauli inverse() const;
    bool commutes_with(const Pauli& other) const;
    bool is_identity() const;
    bool is_identity_up_to_phase() const { return u_.is_zero() && v_.is_zero(); }

    bool operator==(const Pauli&) const = default;

    /// Examples: "X1", "Z3Z4", "+iX1Z1", "-X2", "I".
    std::string to_string() const;

   private:
    uint8_t t_ = 0;
    F2Vec u_;
    F2Vec v_;
};

/// Subgroup of the Pauli group given by independent generators, stored as the
/// reduced echelon basis of their (u|v) rows; per-generator phases are kept
/// but rank, membership, and equality are all computed up to phase.
class PauliSubgroup {
   public:
    explicit PauliSubgroup(uint32_t n);  // trivial group
    static PauliSubgroup from_generators(uint32_t n, const std::vector<Pauli>& gens);

    uint32_t size() const { return n_; }
    uint32_t rank() const { return static_cast<uint32_t>(gens_.size()); }
    const std::vector<Pauli>& generators() const { return gens_; }

    bool is_abelian() const;
    bool is_maximal_abelian() const { return is_abelian() && rank() == n_; }
    bool contains_up_to_phase(const Pauli& p) const;
    bool contains_subgroup(const PauliSubgroup& other) const;
    bool same_group_up_to_phase(const PauliSubgroup& other) const;

    std::vector<std::string> generator_strings() const;

   private:
    uint32_t n_ = 0;
    std::vector<Pauli> gens_;
};

/// The unique factorization P = perm * diag with a permutation Pauli
/// (X-type, phase +1) on the left and a diagonal Pauli on the right.
struct PermDiagSplit {
    Pauli perm;
    Pauli diag;
};
PermDiagSplit perm_diag_split(const Pauli& p);

/// Builds a maximal abelian group A' with B <= A' <= <A, B>: for each
/// generator b of B in turn, the generators of the current group that
/// anticommute with b are replaced by their sequential pairwise products and
/// b is adjoined.
PauliSubgroup extend_to_maximal_abelian(const PauliSubgroup& a, const PauliSubgroup& b);

/// A point (u|v) of F_2^{2n}, identified with X^u Z^v up to phase.
struct SymplecticVec {
    F2Vec u;
    F2Vec v;
    bool operator==(const SymplecticVec&) const = default;
};

/// The form u.v' + u'.v; zero exactly when the operators commute.
bool symplectic_product(const SymplecticVec& a, const SymplecticVec& b);

struct IsotropicResult {
    uint32_t dim;
    std::vector<SymplecticVec> basis;
};

/// Symplectic Gram-Schmidt on the span of the given independent rows:
/// extracts hyperbolic pairs (lowest-index unpaired vector first) until the
/// restricted form vanishes, then returns the radical plus one member of each
/// pair. The result is a maximal isotropic subspace of the span, of dimension
/// dim(span) - rank(restricted form)/2.
IsotropicResult max_isotropic_within(std::vector<SymplecticVec> rows);

}  // namespace permc3
