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

#include "permc3/hierarchy.hpp"

namespace permc3 {

bool is_pauli_gate(const SignedPermGate& u) {
    return u.as_pauli().has_value();
}

bool is_clifford_gate(const SignedPermGate& u) {
    if (!u.permutation().as_affine().has_value()) {
        return false;
    }
    return u.sign_anf().degree() <= 2;
}

C3Result c3_membership(const SignedPermGate& u) {
    const uint32_t n = u.qubits();
    for (uint32_t pass = 0; pass < 2; pass++) {
        for (uint32_t i = 1; i <= n; i++) {
            Pauli g = pass == 0 ? Pauli::x(n, i) : Pauli::z(n, i);
            SignedPermGate c = conjugate_pauli(u, g);
            if (!is_clifford_gate(c)) {
                return C3Result{false, C3Witness{std::move(g), std::move(c)}};
            }
        }
    }
    return C3Result{true, std::nullopt};
}

bool is_c3_gate(const SignedPermGate& u) {
    return c3_membership(u).in_c3;
}

bool is_in_level(const SignedPermGate& u, uint32_t k) {
    if (k < 1) {
        throw PreconditionViolated("hierarchy levels start at 1");
    }
    if (k == 1) {
        return is_pauli_gate(u);
    }
    if (k == 2) {
        return is_clifford_gate(u);
    }
    if (k == 3) {
        return is_c3_gate(u);
    }
    const uint32_t n = u.qubits();
    // 4^{n(k-3)} conjugate chains, each ending in a generator-based C3 check;
    // n = 7 at k = 4 is the documented ceiling.
    if (static_cast<uint64_t>(n) * (k - 3) > 7) {
        throw DimensionTooLarge("level-" + std::to_string(k) + " check on " + std::to_string(n) +
                                " qubits enumerates too many Pauli operators");
    }
    const SignedPermGate uinv = u.inverse();
    for (uint32_t um = 0; um < (1u << n); um++) {
        for (uint32_t vm = 0; vm < (1u << n); vm++) {
            Pauli p(0, F2Vec::from_mask(n, um), F2Vec::from_mask(n, vm));
            SignedPermGate c = u * SignedPermGate::from_pauli(p) * uinv;
            if (!is_in_level(c, k - 1)) {
                return false;
            }
        }
    }
    return true;
}

uint32_t diagonal_level(const AnfPolynomial& f) {
    return static_cast<uint32_t>(f.degree());
}

}  // namespace permc3
