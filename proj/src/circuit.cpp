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

#include "permc3/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permc3 {

CircuitGate CircuitGate::controlled_x(std::vector<uint32_t> controls, uint32_t target) {
    CircuitGate g;
    g.kind = Kind::kControlledX;
    g.controls = std::move(controls);
    g.target = target;
    return g;
}

CircuitGate CircuitGate::phase_flip(std::vector<uint32_t> qubits) {
    CircuitGate g;
    g.kind = Kind::kPhaseFlip;
    g.qubits = std::move(qubits);
    return g;
}

CircuitGate CircuitGate::swap(uint32_t a, uint32_t b) {
    CircuitGate g;
    g.kind = Kind::kSwap;
    g.a = a;
    g.b = b;
    return g;
}

CircuitGate CircuitGate::cswap(uint32_t control, uint32_t a, uint32_t b) {
    CircuitGate g = swap(a, b);
    g.controls = {control};
    return g;
}

CircuitGate CircuitGate::hadamard(uint32_t q) {
    CircuitGate g;
    g.kind = Kind::kHadamard;
    g.target = q;
    return g;
}

namespace {

void check_distinct(const std::vector<uint32_t>& qs, uint32_t n, uint32_t line) {
    std::set<uint32_t> seen;
    for (uint32_t q : qs) {
        if (q < 1 || q > n) {
            throw ParseError(line, "qubit index " + std::to_string(q) + " out of range 1.." +
                                       std::to_string(n));
        }
        if (!seen.insert(q).second) {
            throw ParseError(line, "repeated qubit index " + std::to_string(q));
        }
    }
}

std::vector<uint32_t> gate_qubits(const CircuitGate& g) {
    switch (g.kind) {
        case CircuitGate::Kind::kControlledX: {
            std::vector<uint32_t> qs = g.controls;
            qs.push_back(g.target);
            return qs;
        }
        case CircuitGate::Kind::kPhaseFlip:
            return g.qubits;
        case CircuitGate::Kind::kSwap: {
            std::vector<uint32_t> qs = g.controls;
            qs.push_back(g.a);
            qs.push_back(g.b);
            return qs;
        }
        case CircuitGate::Kind::kHadamard:
            return {g.target};
    }
    return {};
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    uint32_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream line(raw);
        std::string word;
        if (!(line >> word)) {
            continue;
        }
        auto read_indices = [&](size_t count) {
            std::vector<uint32_t> qs;
            long long q;
            while (line >> q) {
                if (q < 1) {
                    throw ParseError(line_no, "qubit indices are 1-based");
                }
                qs.push_back(static_cast<uint32_t>(q));
            }
            if (count != 0 && qs.size() != count) {
                throw ParseError(line_no, word + " expects " + std::to_string(count) +
                                              " qubit indices");
            }
            return qs;
        };

        if (!have_header) {
            if (word != "qubits") {
                throw ParseError(line_no, "expected `qubits n` header");
            }
            long long n;
            if (!(line >> n) || n < 1 || n > static_cast<long long>(kMaxDimension)) {
                throw ParseError(line_no, "qubit count must be in 1.." +
                                              std::to_string(kMaxDimension));
            }
            c.n = static_cast<uint32_t>(n);
            have_header = true;
            continue;
        }

        CircuitGate g;
        if (word == "X") {
            auto qs = read_indices(1);
            g = CircuitGate::controlled_x({}, qs[0]);
        } else if (word == "CNOT") {
            auto qs = read_indices(2);
            g = CircuitGate::controlled_x({qs[0]}, qs[1]);
        } else if (word == "TOF") {
            auto qs = read_indices(3);
            g = CircuitGate::controlled_x({qs[0], qs[1]}, qs[2]);
        } else if (word == "CX") {
            auto qs = read_indices(0);
            if (qs.empty()) {
                throw ParseError(line_no, "CX needs at least a target");
            }
            uint32_t target = qs.back();
            qs.pop_back();
            g = CircuitGate::controlled_x(qs, target);
        } else if (word == "Z") {
            g = CircuitGate::phase_flip(read_indices(1));
        } else if (word == "CZ") {
            g = CircuitGate::phase_flip(read_indices(2));
        } else if (word == "CCZ") {
            g = CircuitGate::phase_flip(read_indices(3));
        } else if (word == "SWAP") {
            auto qs = read_indices(2);
            g = CircuitGate::swap(qs[0], qs[1]);
        } else if (word == "CSWAP") {
            auto qs = read_indices(3);
            g = CircuitGate::cswap(qs[0], qs[1], qs[2]);
        } else if (word == "H") {
            auto qs = read_indices(1);
            g = CircuitGate::hadamard(qs[0]);
        } else {
            throw ParseError(line_no, "unknown gate `" + word + "`");
        }
        check_distinct(gate_qubits(g), c.n, line_no);
        c.gates.push_back(std::move(g));
    }
    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing `qubits n` header");
    }
    return c;
}

std::string render_gate(const CircuitGate& g) {
    std::string s;
    auto append_indices = [&](const std::vector<uint32_t>& qs) {
        for (uint32_t q : qs) {
            s += " " + std::to_string(q);
        }
    };
    switch (g.kind) {
        case CircuitGate::Kind::kControlledX:
            if (g.controls.empty()) {
                s = "X";
            } else if (g.controls.size() == 1) {
                s = "CNOT";
            } else if (g.controls.size() == 2) {
                s = "TOF";
            } else {
                s = "CX";
            }
            append_indices(g.controls);
            s += " " + std::to_string(g.target);
            break;
        case CircuitGate::Kind::kPhaseFlip:
            s = g.qubits.size() == 1 ? "Z" : (g.qubits.size() == 2 ? "CZ" : "CCZ");
            append_indices(g.qubits);
            break;
        case CircuitGate::Kind::kSwap:
            if (g.controls.empty()) {
                s = "SWAP";
            } else {
                s = "CSWAP";
                append_indices(g.controls);
            }
            s += " " + std::to_string(g.a) + " " + std::to_string(g.b);
            break;
        case CircuitGate::Kind::kHadamard:
            s = "H " + std::to_string(g.target);
            break;
    }
    return s;
}

std::string render_circuit(const Circuit& c) {
    std::string s = "qubits " + std::to_string(c.n) + "\n";
    for (const auto& g : c.gates) {
        s += render_gate(g) + "\n";
    }
    return s;
}

namespace {

SignedPermGate single_gate(const CircuitGate& g, uint32_t n) {
    const uint32_t size = 1u << n;
    auto qubit_bit = [&](uint32_t q) { return 1u << (n - q); };
    switch (g.kind) {
        case CircuitGate::Kind::kControlledX: {
            uint32_t cmask = 0;
            for (uint32_t c : g.controls) {
                cmask |= qubit_bit(c);
            }
            const uint32_t tbit = qubit_bit(g.target);
            std::vector<uint16_t> table(size);
            for (uint32_t x = 0; x < size; x++) {
                table[x] = static_cast<uint16_t>(((x & cmask) == cmask) ? (x ^ tbit) : x);
            }
            return SignedPermGate(PermutationGate::from_table(n, std::move(table)));
        }
        case CircuitGate::Kind::kPhaseFlip: {
            uint32_t qmask = 0;
            for (uint32_t q : g.qubits) {
                qmask |= qubit_bit(q);
            }
            PackedBits sign(size);
            for (uint32_t x = 0; x < size; x++) {
                sign.set(x, (x & qmask) == qmask);
            }
            return SignedPermGate::diagonal(n, sign);
        }
        case CircuitGate::Kind::kSwap: {
            uint32_t cmask = 0;
            for (uint32_t c : g.controls) {
                cmask |= qubit_bit(c);
            }
            const uint32_t ba = qubit_bit(g.a);
            const uint32_t bb = qubit_bit(g.b);
            std::vector<uint16_t> table(size);
            for (uint32_t x = 0; x < size; x++) {
                uint32_t y = x;
                if ((x & cmask) == cmask && (((x & ba) != 0) != ((x & bb) != 0))) {
                    y = x ^ (ba | bb);
                }
                table[x] = static_cast<uint16_t>(y);
            }
            return SignedPermGate(PermutationGate::from_table(n, std::move(table)));
        }
        case CircuitGate::Kind::kHadamard:
            throw UnsupportedGateError("H has no signed-permutation form; use the dense matrix");
    }
    throw InternalInvariantViolation("unreachable gate kind");
}

}  // namespace

SignedPermGate circuit_to_gate(const Circuit& c) {
    SignedPermGate u(c.n);
    for (const auto& g : c.gates) {
        u = single_gate(g, c.n) * u;
    }
    return u;
}

bool is_mismatch_free(const Circuit& c) {
    uint32_t controls = 0;
    uint32_t targets = 0;
    for (const auto& g : c.gates) {
        if (g.kind != CircuitGate::Kind::kControlledX) {
            throw UnsupportedGateError("mismatch-free is defined for controlled-X products");
        }
        for (uint32_t q : g.controls) {
            controls |= 1u << q;
        }
        targets |= 1u << g.target;
    }
    return (controls & targets) == 0;
}

bool cx_gates_commute(const CircuitGate& g, const CircuitGate& h) {
    if (g.kind != CircuitGate::Kind::kControlledX || h.kind != CircuitGate::Kind::kControlledX) {
        throw UnsupportedGateError("commutation predicate is defined for controlled-X gates");
    }
    auto mismatched = [](const CircuitGate& a, const CircuitGate& b) {
        return std::find(b.controls.begin(), b.controls.end(), a.target) != b.controls.end();
    };
    return !mismatched(g, h) && !mismatched(h, g);
}

bool is_staircase(const Circuit& c) {
    uint32_t last_target = 0;
    for (const auto& g : c.gates) {
        if (g.kind != CircuitGate::Kind::kControlledX || g.controls.size() != 2) {
            return false;
        }
        if (g.controls[0] >= g.target || g.controls[1] >= g.target) {
            return false;
        }
        if (g.target < last_target) {
            return false;
        }
        last_target = g.target;
    }
    return true;
}

std::vector<CircuitGate> affine_to_gates(const AffineForm& form) {
    const uint32_t n = form.w.size();
    if (form.m.rows() != n || form.m.cols() != n) {
        throw PreconditionViolated("affine form shape mismatch");
    }
    // Row-reduce M to the identity; the recorded elementary operations, in
    // reverse, rebuild M. A row operation r_i += r_j is CNOT with control j
    // and target i; a row swap is three CNOTs.
    F2Matrix work = form.m;
    std::vector<std::pair<uint32_t, uint32_t>> ops;  // (control, target), applied order
    for (uint32_t c = 1; c <= n; c++) {
        uint32_t pivot = c;
        while (pivot <= n && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot > n) {
            throw PreconditionViolated("matrix is not invertible");
        }
        if (pivot != c) {
            // Swap rows c and pivot as three additions.
            for (auto [i, j] : {std::pair{c, pivot}, std::pair{pivot, c}, std::pair{c, pivot}}) {
                for (uint32_t k = 1; k <= n; k++) {
                    work.set(i, k, work.get(i, k) ^ work.get(j, k));
                }
                ops.emplace_back(j, i);
            }
        }
        for (uint32_t r = 1; r <= n; r++) {
            if (r != c && work.get(r, c)) {
                for (uint32_t k = 1; k <= n; k++) {
                    work.set(r, k, work.get(r, k) ^ work.get(c, k));
                }
                ops.emplace_back(c, r);
            }
        }
    }
    // work is now the identity; M equals the inverse operations applied in
    // reverse, and each elementary matrix is its own inverse.
    std::vector<CircuitGate> gates;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        gates.push_back(CircuitGate::controlled_x({it->first}, it->second));
    }
    for (uint32_t i = 1; i <= n; i++) {
        if (form.w.get(i)) {
            gates.push_back(CircuitGate::controlled_x({}, i));
        }
    }
    return gates;
}

}  // namespace permc3
