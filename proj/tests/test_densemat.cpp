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

#include <doctest.h>

#include "generators.hpp"
#include "permc3/circuit.hpp"
#include "permc3/densemat.hpp"
#include "permc3/hierarchy.hpp"

using namespace permc3;

TEST_CASE("single-qubit Hadamard matrix") {
    ScaledIntMatrix h = ScaledIntMatrix::from_circuit(parse_circuit("qubits 1\nH 1\n"));
    CHECK(h.scale() == 1);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(1, 0) == 1);
    CHECK(h.at(1, 1) == -1);
    CHECK(h.is_unitary());
    CHECK((h * h).equals_exact(ScaledIntMatrix::identity(2)));
}

TEST_CASE("Toffoli matrix swaps the last two rows") {
    ScaledIntMatrix t = ScaledIntMatrix::from_circuit(parse_circuit("qubits 3\nTOF 1 2 3\n"));
    CHECK(t.scale() == 0);
    for (uint32_t c = 0; c < 6; c++) {
        CHECK(t.at(c, c) == 1);
    }
    CHECK(t.at(7, 6) == 1);
    CHECK(t.at(6, 7) == 1);
    CHECK(t.at(6, 6) == 0);
    CHECK(t.at(7, 7) == 0);
}

TEST_CASE("empty circuit builds the identity") {
    CHECK(ScaledIntMatrix::from_circuit(Circuit{2, {}})
              .equals_exact(ScaledIntMatrix::identity(4)));
}

TEST_CASE("inverse is the transpose for unitaries") {
    testing::Rng rng(97);
    for (int trial = 0; trial < 50; trial++) {
        uint32_t n = 1 + testing::pick(rng, 3);
        Circuit c = testing::random_signed_perm_circuit(rng, n, 6);
        // Sprinkle Hadamards in, since the dense side can hold them.
        c.gates.insert(c.gates.begin(), CircuitGate::hadamard(1 + testing::pick(rng, n)));
        c.gates.push_back(CircuitGate::hadamard(1 + testing::pick(rng, n)));
        ScaledIntMatrix m = ScaledIntMatrix::from_circuit(c);
        CHECK(m.is_unitary());
        CHECK((m * m.inverse()).equals_exact(ScaledIntMatrix::identity(m.dim())));
        CHECK((m.inverse() * m).equals_exact(ScaledIntMatrix::identity(m.dim())));
    }
}

TEST_CASE("canonicalization and comparisons") {
    ScaledIntMatrix h = ScaledIntMatrix::from_circuit(parse_circuit("qubits 1\nH 1\n"));
    ScaledIntMatrix hh = h * h;  // canonicalized to scale 0 inside the product
    CHECK(hh.scale() == 0);
    CHECK(hh.equals_exact(ScaledIntMatrix::identity(2)));
    ScaledIntMatrix again = hh;
    again.canonicalize();
    CHECK(again.equals_exact(hh));

    CHECK(hh.equals_up_to_sign(hh.negated()));
    CHECK(!hh.equals_exact(hh.negated()));
    CHECK(!h.equals_up_to_sign(hh));
}

TEST_CASE("unitarity is preserved by products") {
    testing::Rng rng(101);
    for (int trial = 0; trial < 30; trial++) {
        Circuit a = testing::random_signed_perm_circuit(rng, 2, 4);
        Circuit b = testing::random_signed_perm_circuit(rng, 2, 4);
        a.gates.push_back(CircuitGate::hadamard(1));
        b.gates.push_back(CircuitGate::hadamard(2));
        ScaledIntMatrix prod =
            ScaledIntMatrix::from_circuit(a) * ScaledIntMatrix::from_circuit(b);
        CHECK(prod.is_unitary());
    }
}

TEST_CASE("dense Pauli detection") {
    // XZ on one qubit is real (it is -iY) and should be detected.
    CHECK(dense_is_pauli(ScaledIntMatrix::pauli_matrix(F2Vec::unit(1, 1), F2Vec::unit(1, 1))));
    CHECK(dense_is_pauli(ScaledIntMatrix::pauli_matrix(F2Vec::unit(2, 1), F2Vec::unit(2, 2))));
    CHECK(dense_is_pauli(ScaledIntMatrix::identity(4)));
    ScaledIntMatrix h = ScaledIntMatrix::from_circuit(parse_circuit("qubits 1\nH 1\n"));
    CHECK(!dense_is_pauli(h));
    CHECK(dense_is_clifford(h));
    ScaledIntMatrix cnot = ScaledIntMatrix::from_circuit(parse_circuit("qubits 2\nCNOT 1 2\n"));
    CHECK(!dense_is_pauli(cnot));
    CHECK(dense_is_clifford(cnot));
    ScaledIntMatrix tof = ScaledIntMatrix::from_circuit(parse_circuit("qubits 3\nTOF 1 2 3\n"));
    CHECK(!dense_is_clifford(tof));
    CHECK(dense_is_c3(tof));
}

TEST_CASE("dimension caps on the brute-force oracles") {
    CHECK_THROWS_AS(dense_is_c3(ScaledIntMatrix::identity(32)), DimensionTooLarge);
    CHECK_THROWS_AS(dense_is_clifford(ScaledIntMatrix::identity(64)), DimensionTooLarge);
}

TEST_CASE("fast predicates agree with the dense oracles") {
    testing::Rng rng(103);
    for (int trial = 0; trial < 500; trial++) {
        uint32_t n = 1 + testing::pick(rng, 3);
        SignedPermGate u = circuit_to_gate(testing::random_signed_perm_circuit(rng, n, 7));
        ScaledIntMatrix m = ScaledIntMatrix::from_signed_perm(u);
        CHECK(is_clifford_gate(u) == dense_is_clifford(m));
        if (n <= 4) {
            CHECK(is_c3_gate(u) == dense_is_c3(m));
        }
    }
}
