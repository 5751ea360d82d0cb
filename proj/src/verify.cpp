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

#include "permc3/verify.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "permc3/decomp.hpp"
#include "permc3/densemat.hpp"
#include "permc3/hierarchy.hpp"
#include "permc3/search6.hpp"

namespace permc3 {

namespace {

const char kGmGateText[] =
    "qubits 7\n"
    "# four CCZs, then three controlled swaps (applied order)\n"
    "CCZ 4 5 6\n"
    "CCZ 2 3 6\n"
    "CCZ 1 3 5\n"
    "CCZ 1 2 4\n"
    "CSWAP 7 3 4\n"
    "CSWAP 7 2 5\n"
    "CSWAP 7 1 6\n";

const char kConjugatorText[] =
    "qubits 7\n"
    "# applied order; as an operator product the H on qubit 7 is rightmost\n"
    "H 7\n"
    "CNOT 4 3\n"
    "CNOT 5 2\n"
    "CNOT 6 1\n"
    "H 6\n"
    "H 5\n"
    "H 4\n";

const char kStaircaseGateText[] =
    "qubits 7\n"
    "# six Toffolis in staircase form (applied order)\n"
    "TOF 1 2 4\n"
    "TOF 1 3 5\n"
    "TOF 2 3 6\n"
    "TOF 3 4 7\n"
    "TOF 2 5 7\n"
    "TOF 1 6 7\n";

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& message) {
    if (!cond) {
        throw CheckFailure(message);
    }
}

std::string load_fixture(const VerifyOptions& options, const char* filename,
                         const char* embedded) {
    if (!options.fixtures_dir.has_value()) {
        return embedded;
    }
    const std::string path = *options.fixtures_dir + "/" + filename;
    std::ifstream in(path);
    if (!in) {
        throw CheckFailure("cannot open fixture " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class Harness {
   public:
    template <typename F>
    void run(const std::string& name, F&& body) {
        VerifyCheck c;
        c.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.detail = body();
            c.pass = true;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
        checks_.push_back(std::move(c));
    }

    std::vector<VerifyCheck> take() { return std::move(checks_); }

   private:
    std::vector<VerifyCheck> checks_;
};

}  // namespace

const char* reference_gm_gate_text() {
    return kGmGateText;
}
const char* reference_conjugator_text() {
    return kConjugatorText;
}
const char* reference_staircase_gate_text() {
    return kStaircaseGateText;
}

std::vector<VerifyCheck> verify_paper(const VerifyOptions& options) {
    Harness h;

    std::optional<Circuit> gm_circ, conj_circ, stair_circ;
    h.run("fixtures-parse", [&] {
        gm_circ = parse_circuit(load_fixture(options, "g.circuit", kGmGateText));
        conj_circ = parse_circuit(load_fixture(options, "f.circuit", kConjugatorText));
        stair_circ = parse_circuit(load_fixture(options, "r.circuit", kStaircaseGateText));
        expect(is_staircase(*stair_circ), "reference staircase circuit is not in staircase form");
        std::ostringstream d;
        d << gm_circ->gates.size() << "+" << conj_circ->gates.size() << "+"
          << stair_circ->gates.size() << " gates";
        return d.str();
    });
    auto need = [](const std::optional<Circuit>& c) -> const Circuit& {
        if (!c.has_value()) {
            throw CheckFailure("fixture unavailable");
        }
        return *c;
    };

    std::optional<SignedPermGate> gm, stair;
    h.run("gm-gate-matches-dense", [&] {
        gm = circuit_to_gate(need(gm_circ));
        ScaledIntMatrix dense = ScaledIntMatrix::from_circuit(need(gm_circ));
        expect(ScaledIntMatrix::from_signed_perm(*gm).equals_exact(dense),
               "signed-permutation build disagrees with the dense product");
        return std::string("128x128 exact match");
    });

    h.run("gm-sign-polynomial", [&] {
        expect(gm.has_value(), "gate unavailable");
        std::string got = gm->sign_anf().to_string();
        expect(got == "a1a2a4 + a1a3a5 + a2a3a6 + a4a5a6", "sign polynomial is " + got);
        return got;
    });

    h.run("gm-gate-in-c3", [&] {
        expect(gm.has_value(), "gate unavailable");
        expect(is_c3_gate(*gm), "all 14 generator conjugates should be Clifford");
        return std::string("all 14 generator conjugates Clifford");
    });

    h.run("gm-inverse-not-c3", [&] {
        expect(gm.has_value(), "gate unavailable");
        C3Result r = c3_membership(gm->inverse());
        expect(!r.in_c3, "the inverse should fail the third-level test");
        expect(r.witness.has_value(), "missing witness");
        return "first failing generator " + r.witness->generator.to_string();
    });

    h.run("gm-inverse-x7-witness", [&] {
        expect(gm.has_value(), "gate unavailable");
        SignedPermGate forward = conjugate_pauli(*gm, Pauli::x(7, 7));
        SignedPermGate backward = conjugate_pauli(gm->inverse(), Pauli::x(7, 7));
        expect(!is_clifford_gate(backward), "conjugate of X7 under the inverse should fail");
        expect(is_clifford_gate(forward), "forward conjugate of X7 should stay Clifford");
        return std::string("inverse-side conjugate of X7 non-Clifford; forward side Clifford");
    });

    h.run("conjugation-identity", [&] {
        ScaledIntMatrix f = ScaledIntMatrix::from_circuit(need(conj_circ));
        ScaledIntMatrix g = ScaledIntMatrix::from_circuit(need(gm_circ));
        ScaledIntMatrix r = ScaledIntMatrix::from_circuit(need(stair_circ));
        expect((f * g * f.inverse()).equals_exact(r),
               "conjugating the reference gate does not give the staircase gate");
        return std::string("128x128 scaled-integer identity, bit-exact");
    });

    h.run("staircase-gate-in-c3", [&] {
        stair = circuit_to_gate(need(stair_circ));
        expect(is_c3_gate(*stair), "the staircase gate should pass the third-level test");
        return std::string("all 14 generator conjugates Clifford");
    });

    h.run("staircase-gate-coordinates", [&] {
        expect(stair.has_value(), "gate unavailable");
        const char* expected[7] = {
            "a1", "a2", "a3", "a4 + a1a2", "a5 + a1a3", "a6 + a2a3",
            "a7 + a1a6 + a2a5 + a3a4 + a1a2a3"};
        auto polys = stair->permutation().polynomial_representation();
        for (int i = 0; i < 7; i++) {
            expect(polys[i].to_string() == expected[i],
                   "coordinate " + std::to_string(i + 1) + " is " + polys[i].to_string());
        }
        expect(polys[6].degree() == 3, "seventh coordinate should have degree 3");
        return std::string("seven coordinates match; coordinate 7 has degree 3");
    });

    h.run("staircase-gate-inverse-quadratic", [&] {
        expect(stair.has_value(), "gate unavailable");
        auto polys = stair->permutation().inverse().polynomial_representation();
        for (int i = 0; i < 7; i++) {
            expect(polys[i].degree() <= 2, "inverse coordinate " + std::to_string(i + 1) +
                                               " has degree " +
                                               std::to_string(polys[i].degree()));
        }
        return std::string("all inverse coordinates have degree <= 2");
    });

    h.run("staircase-gate-inverse-not-c3", [&] {
        expect(stair.has_value(), "gate unavailable");
        expect(!is_c3_gate(stair->inverse()), "the inverse should fail the third-level test");
        return std::string("inverse rejected");
    });

    h.run("staircase-gate-not-semi-clifford", [&] {
        expect(stair.has_value(), "gate unavailable");
        expect(!is_semi_clifford(stair->permutation()), "no certificate should exist");
        return std::string("no maximal abelian certificate");
    });

    h.run("staircase-gate-decomposition", [&] {
        expect(stair.has_value(), "gate unavailable");
        auto out = staircase_decomposition(stair->permutation());
        expect(std::holds_alternative<Decomposition>(out), "decomposition refused");
        const auto& d = std::get<Decomposition>(out);
        expect(is_staircase(d.middle), "factor is not in staircase form");
        return std::to_string(d.middle.gates.size()) + " Toffolis, recomposition verified";
    });

    h.run("staircase-example-polynomials", [&] {
        Circuit c = parse_circuit("qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4\n");
        expect(is_staircase(c), "example should be in staircase form");
        expect(!is_mismatch_free(c), "example should have a mismatch on qubit 3");
        auto polys = circuit_to_gate(c).permutation().polynomial_representation();
        expect(polys[2].to_string() == "a3 + a1a2", "third coordinate is " + polys[2].to_string());
        expect(polys[3].to_string() == "a4 + a1a3",
               "fourth coordinate is " + polys[3].to_string());
        return std::string("staircase but not mismatch-free; coordinates as expected");
    });

    h.run("counterexample-not-c3", [&] {
        PermutationGate bad =
            circuit_to_gate(parse_circuit("qubits 5\nTOF 1 2 3\nTOF 3 4 5\n")).permutation();
        auto out = staircase_decomposition(bad);
        expect(std::holds_alternative<NotC3>(out), "gate should be rejected");
        const auto& w = std::get<NotC3>(out);
        expect(w.reason == NotC3::Reason::kConjugateNotAffine && w.index == 1,
               "witness should be the first X generator");
        PermutationGate expected =
            circuit_to_gate(parse_circuit("qubits 5\nX 1\nCNOT 2 3\nTOF 2 4 5\n")).permutation();
        expect(w.conjugate.has_value() && *w.conjugate == expected,
               "witness conjugate is not the expected gate");
        return std::string("rejected with witness X1 -> X1 CNOT(2,3) TOF(2,4,5)");
    });

    h.run("commutation-spot-checks", [&] {
        auto tof = [](uint32_t a, uint32_t b, uint32_t t) {
            return CircuitGate::controlled_x({a, b}, t);
        };
        auto table_commute = [](const CircuitGate& a, const CircuitGate& b) {
            Circuit ab{5, {a, b}};
            Circuit ba{5, {b, a}};
            return circuit_to_gate(ab) == circuit_to_gate(ba);
        };
        CircuitGate g1 = tof(1, 2, 3), g2 = tof(1, 2, 4), g3 = tof(3, 4, 5);
        expect(cx_gates_commute(g1, g2) && table_commute(g1, g2),
               "no-mismatch pair should commute");
        expect(!cx_gates_commute(g1, g3) && !table_commute(g1, g3),
               "mismatched pair should not commute");
        return std::string("predicate and truth-table commutation agree");
    });

    if (options.full) {
        h.run("six-qubit-search", [&] {
            SearchReport r = run_search(options.threads);
            expect(r.failures.empty(),
                   std::to_string(r.failures.size()) + " uncertified third-level subsets");
            expect(r.c3_count == r.mismatch_free_count + r.certified_total(),
                   "classification counts are inconsistent");
            std::ostringstream d;
            d << r.total << " subsets, " << r.c3_count << " in the third level ("
              << r.mismatch_free_count << " mismatch-free, " << r.certified_total()
              << " certified), 0 uncertified, " << r.wall_seconds << " s on " << r.threads
              << " threads";
            return d.str();
        });
    }

    return h.take();
}

}  // namespace permc3
