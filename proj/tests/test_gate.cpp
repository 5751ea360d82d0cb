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
#include "permc3/gate.hpp"
#include "permc3/hierarchy.hpp"

using namespace permc3;

TEST_CASE("basis-state convention: qubit 1 is the top bit") {
    auto tof = circuit_to_gate(parse_circuit("qubits 3\nTOF 1 2 3\n"));
    // |110> = index 6 maps to |111> = index 7 with no phase.
    auto [image, phase] = tof.apply(0b110);
    CHECK(image == 0b111);
    CHECK(phase == 0);
    CHECK(tof.apply(0b111).first == 0b110);
    CHECK(tof.apply(0b010).first == 0b010);
}

TEST_CASE("tables must be bijections") {
    CHECK_THROWS_AS(PermutationGate::from_table(1, {0, 0}), PreconditionViolated);
    CHECK_THROWS_AS(PermutationGate::from_table(1, {0}), PreconditionViolated);
    CHECK_THROWS_AS(PermutationGate::from_table(1, {0, 2}), PreconditionViolated);
}

TEST_CASE("compose and inverse cancel on random gates") {
    testing::Rng rng(59);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 2 + testing::pick(rng, 2);
        SignedPermGate u = circuit_to_gate(testing::random_signed_perm_circuit(rng, n, 6));
        CHECK((u * u.inverse()).is_identity());
        CHECK((u.inverse() * u).is_identity());
    }
    SignedPermGate x1 = circuit_to_gate(parse_circuit("qubits 2\nX 1\n"));
    CHECK((x1 * x1).is_identity());
}

TEST_CASE("Pauli embedding multiplies like the symbolic algebra") {
    testing::Rng rng(61);
    for (int trial = 0; trial < 300; trial++) {
        uint32_t n = 1 + testing::pick(rng, 3);
        Pauli p = testing::random_pauli(rng, n);
        Pauli q = testing::random_pauli(rng, n);
        CHECK(SignedPermGate::from_pauli(p) * SignedPermGate::from_pauli(q) ==
              SignedPermGate::from_pauli(p * q));
        auto back = SignedPermGate::from_pauli(p).as_pauli();
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("conjugation examples") {
    SUBCASE("identity fixes everything") {
        const uint32_t n = 3;
        SignedPermGate id(n);
        Pauli p = Pauli::y(n, 2);
        CHECK(conjugate_pauli(id, p) == SignedPermGate::from_pauli(p));
    }
    SUBCASE("CNOT propagates X from control to target") {
        auto cnot = circuit_to_gate(parse_circuit("qubits 2\nCNOT 1 2\n"));
        auto out = conjugate_pauli(cnot, Pauli::x(2, 1)).as_pauli();
        REQUIRE(out.has_value());
        CHECK(*out == Pauli::x(2, 1) * Pauli::x(2, 2));
    }
    SUBCASE("two stacked Toffolis push X1 to a three-gate conjugate") {
        auto u = circuit_to_gate(parse_circuit("qubits 5\nTOF 1 2 3\nTOF 3 4 5\n"));
        auto expect = circuit_to_gate(parse_circuit("qubits 5\nX 1\nCNOT 2 3\nTOF 2 4 5\n"));
        CHECK(conjugate_pauli(u, Pauli::x(5, 1)) == expect);
    }
    SUBCASE("conjugation is multiplicative") {
        testing::Rng rng(67);
        for (int trial = 0; trial < 200; trial++) {
            uint32_t n = 2 + testing::pick(rng, 2);
            SignedPermGate u = circuit_to_gate(testing::random_signed_perm_circuit(rng, n, 5));
            Pauli p = testing::random_pauli(rng, n);
            Pauli q = testing::random_pauli(rng, n);
            CHECK(conjugate_pauli(u, p * q) == conjugate_pauli(u, p) * conjugate_pauli(u, q));
        }
    }
}

TEST_CASE("affine detection") {
    SUBCASE("X is a translation") {
        auto x2 = circuit_to_gate(parse_circuit("qubits 2\nX 2\n")).permutation();
        auto aff = x2.as_affine();
        REQUIRE(aff.has_value());
        CHECK(aff->m == F2Matrix::identity(2));
        CHECK(aff->w == F2Vec::unit(2, 2));
    }
    SUBCASE("CNOT is linear with the expected matrix") {
        auto cnot = circuit_to_gate(parse_circuit("qubits 2\nCNOT 1 2\n")).permutation();
        auto aff = cnot.as_affine();
        REQUIRE(aff.has_value());
        CHECK(aff->w.is_zero());
        CHECK(aff->m.column(1) == (F2Vec::unit(2, 1) + F2Vec::unit(2, 2)));
        CHECK(aff->m.column(2) == F2Vec::unit(2, 2));
    }
    SUBCASE("Toffoli is not affine") {
        auto tof = circuit_to_gate(parse_circuit("qubits 3\nTOF 1 2 3\n")).permutation();
        CHECK(!tof.as_affine().has_value());
    }
    SUBCASE("round trip through the affine constructor") {
        testing::Rng rng(71);
        for (int trial = 0; trial < 100; trial++) {
            uint32_t n = 1 + testing::pick(rng, 5);
            F2Matrix m = testing::random_invertible(rng, n);
            F2Vec w = testing::random_vec(rng, n);
            auto aff = PermutationGate::affine(m, w).as_affine();
            REQUIRE(aff.has_value());
            CHECK(aff->m == m);
            CHECK(aff->w == w);
        }
    }
}

TEST_CASE("inert qubit extension") {
    SUBCASE("identity stays the identity") {
        CHECK(SignedPermGate(3).extended_with_inert_qubits(2).is_identity());
    }
    SUBCASE("extended Toffoli keeps its level") {
        auto tof = circuit_to_gate(parse_circuit("qubits 3\nTOF 1 2 3\n"));
        SignedPermGate ext = tof.extended_with_inert_qubits(1);
        CHECK(ext.qubits() == 4);
        CHECK(is_c3_gate(ext));
        CHECK(!is_clifford_gate(ext));
        // Acts as the Toffoli on the top three qubits.
        CHECK(ext.apply(0b1100).first == 0b1110);
        CHECK(ext.apply(0b1101).first == 0b1111);
        CHECK(ext.apply(0b0101).first == 0b0101);
    }
    SUBCASE("sign tables extend too") {
        auto ccz = circuit_to_gate(parse_circuit("qubits 3\nCCZ 1 2 3\n"));
        SignedPermGate ext = ccz.extended_with_inert_qubits(1);
        CHECK(ext.apply(0b1110).second == 2);
        CHECK(ext.apply(0b1111).second == 2);
        CHECK(ext.apply(0b1100).second == 0);
    }
    SUBCASE("the dimension cap holds") {
        CHECK_THROWS_AS(SignedPermGate(10).extended_with_inert_qubits(7), DimensionTooLarge);
    }
}
