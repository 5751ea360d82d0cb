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

#include <json.hpp>

#include "permc3/decomp.hpp"
#include "permc3/gate.hpp"
#include "permc3/search6.hpp"

namespace permc3 {

/// Everything `analyze` prints about one gate.
struct AnalysisReport {
    uint32_t n = 0;
    bool pure_permutation = false;
    uint8_t phase_exponent = 0;
    std::vector<std::string> coordinates;
    std::vector<int> degrees;
    std::string sign_polynomial;
    int sign_degree = 0;
    bool pauli = false;
    bool clifford = false;
    bool c3 = false;
    std::optional<std::string> c3_witness;
    std::optional<uint32_t> requested_level;
    std::optional<bool> in_requested_level;

    enum class SemiClifford { kNotApplicable, kYes, kNo };
    SemiClifford semi_clifford = SemiClifford::kNotApplicable;
    std::optional<uint32_t> semi_clifford_level;
    std::vector<std::string> certificate_group;
    std::vector<std::string> certificate_image;
};

AnalysisReport analyze_gate(const SignedPermGate& u, std::optional<uint32_t> level_k);
nlohmann::ordered_json analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);

/// Circuit-text serialization of a decomposition. Sections appear in applied
/// order (right factor first), so the file parses back to the original gate;
/// as operators the gate is phi1 * mu * phi2.
std::string render_decomposition(const Decomposition& d);

/// Splits a rendered decomposition back into its three factors, in operator
/// order: {phi1, mu, phi2}.
struct DecompositionSections {
    Circuit phi1, mu, phi2;
};
DecompositionSections parse_decomposition(const std::string& text);

nlohmann::ordered_json decomposition_to_json(const Decomposition& d);
nlohmann::ordered_json search_report_to_json(const SearchReport& r);

}  // namespace permc3
