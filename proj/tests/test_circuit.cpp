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

#include <sstream>

#include "generators.hpp"
#include "permc3/circuit.hpp"
#include "permc3/verify.hpp"

using namespace permc3;

TEST_CASE("parser accepts the documented grammar") {
    Circuit c = parse_circuit(
        "qubits 5\n"
        "# comment line\n"
        "X 3\n"
        "CNOT 1 2  # trailing comment\n"
        "TOF 1 2 3\n"
        "CX 1 2 3 4\n"
        "CX 4\n"
        "Z 5\n"
        "CZ 1 5\n"
        "CCZ 1 2 5\n"
        "SWAP 1 2\n"
        "CSWAP 3 1 2\n");
    CHECK(c.n == 5);
    REQUIRE(c.gates.size() == 10);
    CHECK(c.gates[0] == CircuitGate::controlled_x({}, 3));
    CHECK(c.gates[3] == CircuitGate::controlled_x({1, 2, 3}, 4));
    CHECK(c.gates[4] == CircuitGate::controlled_x({}, 4));
    CHECK(c.gates[9] == CircuitGate::cswap(3, 1, 2));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_circuit(text);
        } catch (const ParseError& e) {
            return e.line_number;
        }
        return 0u;
    };
    CHECK(line_of("X 1\n") == 1);                         // missing header
    CHECK(line_of("qubits 0\n") == 1);                    // degenerate width
    CHECK(line_of("qubits 17\n") == 1);                   // above the cap
    CHECK(line_of("qubits 3\nTOF 1 2\n") == 2);           // wrong arity
    CHECK(line_of("qubits 3\nTOF 1 1 2\n") == 2);         // repeated qubit
    CHECK(line_of("qubits 3\nTOF 1 2 4\n") == 2);         // out of range
    CHECK(line_of("qubits 3\n\n\nBOGUS 1\n") == 4);       // unknown gate
    CHECK_THROWS_AS(parse_circuit(""), ParseError);
}

TEST_CASE("render/parse round-trip is token-identical for the references") {
    for (const char* text : {reference_gm_gate_text(), reference_conjugator_text(),
                             reference_staircase_gate_text()}) {
        Circuit c = parse_circuit(text);
        std::string rendered = render_circuit(c);
        CHECK(parse_circuit(rendered) == c);
        // Tokens survive modulo comments and blank lines.
        auto tokens = [](const std::string& s) {
            std::istringstream in(s);
            std::string line, word;
            std::vector<std::string> out;
            while (std::getline(in, line)) {
                if (auto h = line.find('#'); h != std::string::npos) {
                    line.resize(h);
                }
                std::istringstream ls(line);
                while (ls >> word) {
                    out.push_back(word);
                }
            }
            return out;
        };
        CHECK(tokens(rendered) == tokens(text));
    }
}

TEST_CASE("circuit folding semantics") {
    SUBCASE("the empty circuit is the identity") {
        CHECK(circuit_to_gate(Circuit{3, {}}).is_identity());
    }
    SUBCASE("X3 is a translation") {
        SignedPermGate g = circuit_to_gate(parse_circuit("qubits 3\nX 3\n"));
        CHECK(g.permutation() == PermutationGate::translation(F2Vec::unit(3, 3)));
        CHECK(!g.sign_table().any());
    }
    SUBCASE("diagonals applied first live on the input coordinates") {
        SignedPermGate g = circuit_to_gate(parse_circuit("qubits 2\nCZ 1 2\nSWAP 1 2\n"));
        CHECK(g.sign_anf().to_string() == "a1a2");
        CHECK(g.apply(0b11).second == 2);
        CHECK(g.apply(0b01).first == 0b10);
    }
    SUBCASE("diagonals applied after a permutation compose through it") {
        SignedPermGate g = circuit_to_gate(parse_circuit("qubits 2\nX 1\nZ 1\n"));
        // Sign sees the flipped qubit: f(w) = w1 + 1 up to the global phase.
        CHECK(g.apply(0b00).second == 2);
        CHECK(g.apply(0b10).second == 0);
    }
    SUBCASE("Hadamard is rejected") {
        CHECK_THROWS_AS(circuit_to_gate(parse_circuit("qubits 1\nH 1\n")), UnsupportedGateError);
    }
    SUBCASE("folded gates match per-gate application on random circuits") {
        testing::Rng rng(73);
        for (int trial = 0; trial < 50; trial++) {
            uint32_t n = 2 + testing::pick(rng, 3);
            Circuit c = testing::random_signed_perm_circuit(rng, n, 8);
            SignedPermGate whole = circuit_to_gate(c);
            SignedPermGate acc(n);
            for (const auto& g : c.gates) {
                acc = circuit_to_gate(Circuit{n, {g}}) * acc;
            }
            CHECK(whole == acc);
        }
    }
}

TEST_CASE("mismatch-free predicate") {
    CHECK(is_mismatch_free(parse_circuit("qubits 4\nTOF 1 2 3\nTOF 1 2 4\n")));
    // Qubit 3 is both a control and a target here.
    CHECK(!is_mismatch_free(parse_circuit("qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4\n")));
    CHECK(is_mismatch_free(Circuit{3, {}}));
    CHECK_THROWS_AS(is_mismatch_free(parse_circuit("qubits 2\nZ 1\n")), UnsupportedGateError);
}

TEST_CASE("pairwise commutation matches the no-mismatch predicate") {
    auto g1 = CircuitGate::controlled_x({1, 2}, 3);
    auto g2 = CircuitGate::controlled_x({1, 2}, 4);
    auto g3 = CircuitGate::controlled_x({3, 4}, 5);
    CHECK(cx_gates_commute(g1, g2));
    CHECK(!cx_gates_commute(g1, g3));
}

TEST_CASE("staircase predicate") {
    CHECK(is_staircase(parse_circuit("qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4\n")));
    CHECK(is_staircase(parse_circuit(reference_staircase_gate_text())));
    // Target order violated.
    CHECK(!is_staircase(parse_circuit("qubits 4\nTOF 1 2 4\nTOF 1 2 3\nTOF 1 3 4\n")));
    // Controls must sit below the target.
    CHECK(!is_staircase(parse_circuit("qubits 4\nTOF 1 4 3\n")));
    // Only two-control gates qualify.
    CHECK(!is_staircase(parse_circuit("qubits 4\nCNOT 1 2\n")));
    CHECK(is_staircase(Circuit{4, {}}));
}

TEST_CASE("parser survives mutated inputs") {
    // Random line-level mutations of a valid file must either parse or throw
    // ParseError; nothing else.
    testing::Rng rng(191);
    const std::string base(reference_staircase_gate_text());
    for (int trial = 0; trial < 2000; trial++) {
        std::string text = base;
        const int mutations = 1 + testing::pick(rng, 3);
        for (int m = 0; m < mutations; m++) {
            if (text.empty()) {
                break;
            }
            size_t pos = testing::pick(rng, static_cast<uint32_t>(text.size()));
            switch (testing::pick(rng, 4)) {
                case 0:
                    text[pos] = static_cast<char>('0' + testing::pick(rng, 10));
                    break;
                case 1:
                    text[pos] = static_cast<char>(32 + testing::pick(rng, 95));
                    break;
                case 2:
                    text.erase(pos, 1);
                    break;
                case 3:
                    text.insert(pos, 1, static_cast<char>('0' + testing::pick(rng, 10)));
                    break;
            }
        }
        try {
            Circuit c = parse_circuit(text);
            CHECK(c.n >= 1);
        } catch (const ParseError&) {
            // expected for most mutations
        }
    }
}

TEST_CASE("affine synthesis rebuilds the map") {
    testing::Rng rng(79);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + testing::pick(rng, 6);
        F2Matrix m = testing::random_invertible(rng, n);
        F2Vec w = testing::random_vec(rng, n);
        auto gates = affine_to_gates(AffineForm{m, w});
        Circuit c{n, gates};
        CHECK(circuit_to_gate(c).permutation() == PermutationGate::affine(m, w));
        for (const auto& g : gates) {
            CHECK(g.kind == CircuitGate::Kind::kControlledX);
            CHECK(g.controls.size() <= 1);
        }
    }
}
