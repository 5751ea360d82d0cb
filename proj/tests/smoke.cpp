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

// Quick end-to-end exercise of the core types.

#include <cstdio>
#include <cstdlib>

#include "permc3/circuit.hpp"
#include "permc3/densemat.hpp"
#include "permc3/hierarchy.hpp"

using namespace permc3;

static void require(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "smoke failure: %s\n", what);
        std::exit(1);
    }
}

int main() {
    Circuit tof = parse_circuit("qubits 3\nTOF 1 2 3\n");
    SignedPermGate g = circuit_to_gate(tof);
    require(g.permutation().apply(0b110) == 0b111, "TOF flips |110>");
    require(is_c3_gate(g), "TOF is in the third level");
    require(!is_clifford_gate(g), "TOF is not Clifford");

    auto polys = g.permutation().polynomial_representation();
    require(polys[2].to_string() == "a3 + a1a2", "TOF third coordinate");

    ScaledIntMatrix h = ScaledIntMatrix::from_circuit(parse_circuit("qubits 1\nH 1\n"));
    require((h * h).equals_exact(ScaledIntMatrix::identity(2)), "H squares to identity");
    require(dense_is_clifford(h), "H is Clifford");
    require(!dense_is_pauli(h), "H is not Pauli");

    std::puts("smoke ok");
    return 0;
}
