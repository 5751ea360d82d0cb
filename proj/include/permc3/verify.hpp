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

#include <optional>
#include <string>
#include <vector>

namespace permc3 {

/// The three seven-qubit reference circuits, in applied-order text. Operator
/// notation lists such products with the rightmost factor acting first; the
/// texts below list gates in the order they are applied.
const char* reference_gm_gate_text();        // three controlled swaps after four CCZs
const char* reference_conjugator_text();     // the Hadamard/CNOT conjugating Clifford
const char* reference_staircase_gate_text(); // its conjugate, six Toffolis in staircase form

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct VerifyOptions {
    bool full = false;         // also run the exhaustive six-qubit scan
    uint32_t threads = 1;      // threads for the scan
    std::optional<std::string> fixtures_dir;  // read circuits from files instead
};

/// Runs the fixed checklist of reference results; one entry per check.
std::vector<VerifyCheck> verify_paper(const VerifyOptions& options);

}  // namespace permc3
