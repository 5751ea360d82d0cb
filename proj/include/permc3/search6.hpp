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

#include <array>
#include <cstdint>
#include <vector>

#include "permc3/circuit.hpp"
#include "permc3/gate.hpp"
#include "permc3/pauli.hpp"

namespace permc3 {

/// One Toffoli descriptor on six qubits, controls c1 < c2 < target.
struct Toffoli6 {
    uint8_t c1, c2, t;
};

/// The 20 Toffoli gates with c1 < c2 < t on 6 qubits, sorted by
/// (t, c2, c1); applying any subset in this order is a staircase circuit,
/// and same-target gates commute, so a subset determines its gate.
const std::array<Toffoli6, 20>& toffoli_universe6();

/// Subset of the universe as a circuit in canonical order (bit g of the mask
/// selects gate g).
Circuit mask_to_circuit(uint32_t mask);

/// Bit-sliced evaluation of the subset's permutation: the 64-entry truth
/// table lives in six machine words and each Toffoli is one AND+XOR.
PermutationGate build_perm6(uint32_t mask);

/// The five fixed maximal abelian subgroups used as certificates, in the
/// order they are tried. Their maximality is asserted on first use.
const std::array<PauliSubgroup, 5>& certification_subgroups();

enum class MaskClass : uint8_t {
    kNotC3,
    kC3MismatchFree,
    kC3Certified,
    kC3Uncertified,  // valid outcome type; a full run must never produce it
};

struct MaskOutcome {
    MaskClass cls;
    int subgroup = -1;  // first certifying subgroup (0-based) when certified
};

/// Classifies one subset: third-level test by the 12 generator conjugations
/// (X-side affineness, Z-side quadratic degree, via packed transforms); if in
/// the third level, the mismatch-free test on the selected descriptors, then
/// the five subgroups in listed order (a subgroup certifies when the
/// conjugate of each of its six generators is Pauli).
MaskOutcome classify_mask(uint32_t mask);

struct SearchReport {
    uint64_t total = 0;
    uint64_t c3_count = 0;
    uint64_t mismatch_free_count = 0;          // mismatch-free masks inside the third level
    std::array<uint64_t, 5> certified_by{};    // histogram over the subgroups
    std::vector<uint32_t> failures;            // uncertified third-level masks; must stay empty
    double wall_seconds = 0;
    uint32_t threads = 1;

    uint64_t certified_total() const {
        uint64_t s = 0;
        for (uint64_t c : certified_by) {
            s += c;
        }
        return s;
    }
};

/// Full scan of all 2^20 subsets, statically partitioned into 2^12-mask
/// chunks; per-chunk reports merge associatively so the counts do not depend
/// on the thread count.
SearchReport run_search(uint32_t threads);

struct CrossCheckReport {
    uint64_t checked = 0;
    uint64_t mismatches = 0;
};

/// Samples masks deterministically and compares the fast classification with
/// the scalar pipeline: third-level membership against the generator check on
/// the composed gate, and for third-level masks the semi-Clifford certificate
/// must exist with the classification explaining it.
CrossCheckReport cross_check_sample(uint64_t samples, uint64_t seed);

}  // namespace permc3
