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
#include <string_view>
#include <vector>

#include "permc3/gate.hpp"

namespace permc3 {

/// One gate of a circuit, 1-based qubit indices.
///
/// Kinds: kControlledX is an X on `target` controlled by every qubit in
/// `controls` (0 controls = X, 1 = CNOT, 2 = TOF); kPhaseFlip is a -1 phase
/// on basis states where all of `qubits` are 1 (Z/CZ/CCZ); kSwap exchanges
/// `a` and `b`, optionally under a control; kHadamard is representable only
/// as a dense matrix.
struct CircuitGate {
    enum class Kind { kControlledX, kPhaseFlip, kSwap, kHadamard };

    Kind kind = Kind::kControlledX;
    std::vector<uint32_t> controls;  // kControlledX; for kSwap, empty or one control
    uint32_t target = 0;             // kControlledX; kHadamard qubit
    std::vector<uint32_t> qubits;    // kPhaseFlip
    uint32_t a = 0, b = 0;           // kSwap

    static CircuitGate controlled_x(std::vector<uint32_t> controls, uint32_t target);
    static CircuitGate phase_flip(std::vector<uint32_t> qubits);
    static CircuitGate swap(uint32_t a, uint32_t b);
    static CircuitGate cswap(uint32_t control, uint32_t a, uint32_t b);
    static CircuitGate hadamard(uint32_t q);

    bool operator==(const CircuitGate&) const = default;
};

/// Gates are listed in applied order: the first gate acts first.
struct Circuit {
    uint32_t n = 0;
    std::vector<CircuitGate> gates;

    bool operator==(const Circuit&) const = default;
};

/// Text format: a required `qubits n` header, then one gate per line with
/// 1-based indices and `#` comments:
///   X t | CNOT c t | TOF c1 c2 t | CX c1 ... ck t | Z q | CZ q1 q2 |
///   CCZ q1 q2 q3 | SWAP a b | CSWAP c a b | H q
Circuit parse_circuit(std::string_view text);
std::string render_circuit(const Circuit& c);
std::string render_gate(const CircuitGate& g);

/// Folds the gates left to right into a signed permutation gate.
/// Throws UnsupportedGateError if the circuit contains a Hadamard.
SignedPermGate circuit_to_gate(const Circuit& c);

/// True when no qubit is used both as a control and as a target.
/// Only defined for circuits of controlled-X gates.
bool is_mismatch_free(const Circuit& c);

/// No-mismatch predicate for a pair of controlled-X gates; agrees with
/// truth-table commutation.
bool cx_gates_commute(const CircuitGate& g, const CircuitGate& h);

/// True when every gate is a Toffoli with both controls below its target and
/// the targets are nondecreasing in applied order.
bool is_staircase(const Circuit& c);

/// Renders an affine permutation |v> -> |Mv + w> as a CNOT/X gate list
/// (row-reduction for M, then X gates for w).
std::vector<CircuitGate> affine_to_gates(const AffineForm& form);

}  // namespace permc3
