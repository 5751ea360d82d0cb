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

#include "permc3/report.hpp"

#include <sstream>

#include "permc3/hierarchy.hpp"

namespace permc3 {

AnalysisReport analyze_gate(const SignedPermGate& u, std::optional<uint32_t> level_k) {
    AnalysisReport r;
    r.n = u.qubits();
    r.pure_permutation = u.is_permutation();
    r.phase_exponent = u.phase_exponent();

    for (const auto& p : u.permutation().polynomial_representation()) {
        r.coordinates.push_back(p.to_string());
        r.degrees.push_back(p.degree());
    }
    AnfPolynomial sign = u.sign_anf();
    r.sign_polynomial = sign.to_string();
    r.sign_degree = sign.degree();

    r.pauli = is_pauli_gate(u);
    r.clifford = is_clifford_gate(u);
    C3Result c3 = c3_membership(u);
    r.c3 = c3.in_c3;
    if (c3.witness.has_value()) {
        r.c3_witness = c3.witness->generator.to_string();
    }
    if (level_k.has_value()) {
        r.requested_level = level_k;
        r.in_requested_level = is_in_level(u, *level_k);
    }

    if (r.pure_permutation) {
        auto cert = semi_clifford_certificate(u.permutation());
        if (cert.has_value()) {
            r.semi_clifford = AnalysisReport::SemiClifford::kYes;
            r.semi_clifford_level = semi_clifford_level(u.permutation());
            r.certificate_group = cert->group.generator_strings();
            for (const auto& p : cert->image_generators) {
                r.certificate_image.push_back(p.to_string());
            }
        } else {
            r.semi_clifford = AnalysisReport::SemiClifford::kNo;
        }
    }
    return r;
}

nlohmann::ordered_json analysis_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["pure_permutation"] = r.pure_permutation;
    j["phase_exponent"] = r.phase_exponent;
    j["coordinates"] = r.coordinates;
    j["degrees"] = r.degrees;
    j["sign_polynomial"] = r.sign_polynomial;
    j["sign_degree"] = r.sign_degree;
    j["pauli"] = r.pauli;
    j["clifford"] = r.clifford;
    j["c3"] = r.c3;
    if (r.c3_witness.has_value()) {
        j["c3_witness"] = *r.c3_witness;
    }
    if (r.requested_level.has_value()) {
        j["requested_level"] = *r.requested_level;
        j["in_requested_level"] = *r.in_requested_level;
    }
    switch (r.semi_clifford) {
        case AnalysisReport::SemiClifford::kNotApplicable:
            j["semi_clifford"] = nullptr;
            break;
        case AnalysisReport::SemiClifford::kYes: {
            nlohmann::ordered_json sc;
            sc["status"] = true;
            if (r.semi_clifford_level.has_value()) {
                sc["level"] = *r.semi_clifford_level;
            }
            sc["certificate"] = {{"group", r.certificate_group}, {"image", r.certificate_image}};
            j["semi_clifford"] = sc;
            break;
        }
        case AnalysisReport::SemiClifford::kNo:
            j["semi_clifford"] = {{"status", false}};
            break;
    }
    return j;
}

std::string analysis_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "qubits: " << r.n << "\n";
    if (!r.pure_permutation) {
        out << "kind: signed permutation (phase exponent " << int(r.phase_exponent) << ")\n";
    } else {
        out << "kind: permutation\n";
    }
    out << "coordinates:\n";
    for (size_t i = 0; i < r.coordinates.size(); i++) {
        out << "  " << (i + 1) << ": " << r.coordinates[i] << "  (degree " << r.degrees[i]
            << ")\n";
    }
    if (r.sign_polynomial != "0") {
        out << "sign polynomial: " << r.sign_polynomial << "  (degree " << r.sign_degree << ")\n";
    }
    out << "pauli: " << (r.pauli ? "yes" : "no") << "\n";
    out << "clifford: " << (r.clifford ? "yes" : "no") << "\n";
    out << "c3: " << (r.c3 ? "yes" : "no");
    if (r.c3_witness.has_value()) {
        out << "  (witness " << *r.c3_witness << ")";
    }
    out << "\n";
    if (r.requested_level.has_value()) {
        out << "level " << *r.requested_level << ": "
            << (*r.in_requested_level ? "yes" : "no") << "\n";
    }
    switch (r.semi_clifford) {
        case AnalysisReport::SemiClifford::kNotApplicable:
            break;
        case AnalysisReport::SemiClifford::kYes:
            out << "semi-clifford: yes";
            if (r.semi_clifford_level.has_value()) {
                out << "  (level " << *r.semi_clifford_level << ")";
            }
            out << "\n  certificate group:";
            for (const auto& s : r.certificate_group) {
                out << " " << s;
            }
            out << "\n  conjugate image:";
            for (const auto& s : r.certificate_image) {
                out << " " << s;
            }
            out << "\n";
            break;
        case AnalysisReport::SemiClifford::kNo:
            out << "semi-clifford: no\n";
            break;
    }
    return out.str();
}

namespace {

std::vector<CircuitGate> affine_gates_of(const PermutationGate& g) {
    auto aff = g.as_affine();
    if (!aff.has_value()) {
        throw PreconditionViolated("decomposition factor is not affine");
    }
    return affine_to_gates(*aff);
}

void append_section(std::string& out, const std::string& name,
                    const std::vector<CircuitGate>& gates) {
    out += "# " + name + "\n";
    for (const auto& g : gates) {
        out += render_gate(g) + "\n";
    }
}

std::vector<std::string> gate_strings(const std::vector<CircuitGate>& gates) {
    std::vector<std::string> out;
    out.reserve(gates.size());
    for (const auto& g : gates) {
        out.push_back(render_gate(g));
    }
    return out;
}

}  // namespace

std::string render_decomposition(const Decomposition& d) {
    std::string out;
    out += "# sections in applied order; as operators the gate is phi1 * mu * phi2\n";
    out += "qubits " + std::to_string(d.middle.n) + "\n";
    append_section(out, "phi2", affine_gates_of(d.right));
    append_section(out, "mu", d.middle.gates);
    append_section(out, "phi1", affine_gates_of(d.left));
    return out;
}

DecompositionSections parse_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    uint32_t n = 0;
    std::string current;
    std::vector<std::string> phi1, mu, phi2;
    while (std::getline(in, line)) {
        if (line.rfind("# phi2", 0) == 0 || line.rfind("# mu", 0) == 0 ||
            line.rfind("# phi1", 0) == 0) {
            current = line.substr(2);
            continue;
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.rfind("qubits", 0) == 0) {
            n = static_cast<uint32_t>(std::stoul(line.substr(7)));
            continue;
        }
        if (current == "phi1") {
            phi1.push_back(line);
        } else if (current == "mu") {
            mu.push_back(line);
        } else if (current == "phi2") {
            phi2.push_back(line);
        }
    }
    auto build = [&](const std::vector<std::string>& lines) {
        std::string t = "qubits " + std::to_string(n) + "\n";
        for (const auto& l : lines) {
            t += l + "\n";
        }
        return parse_circuit(t);
    };
    return DecompositionSections{build(phi1), build(mu), build(phi2)};
}

nlohmann::ordered_json decomposition_to_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["qubits"] = d.middle.n;
    j["phi1"] = gate_strings(affine_gates_of(d.left));
    j["mu"] = gate_strings(d.middle.gates);
    j["phi2"] = gate_strings(affine_gates_of(d.right));
    return j;
}

nlohmann::ordered_json search_report_to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["total"] = r.total;
    j["c3_count"] = r.c3_count;
    j["mismatch_free_count"] = r.mismatch_free_count;
    j["certified_total"] = r.certified_total();
    j["certified_by_subgroup"] = r.certified_by;
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : certification_subgroups()) {
        groups.push_back(g.generator_strings());
    }
    j["subgroups"] = groups;
    j["uncertified"] = r.failures;
    j["wall_seconds"] = r.wall_seconds;
    j["threads"] = r.threads;
    return j;
}

}  // namespace permc3
