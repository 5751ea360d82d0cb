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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "permc3/decomp.hpp"
#include "permc3/densemat.hpp"
#include "permc3/hierarchy.hpp"
#include "permc3/report.hpp"
#include "permc3/search6.hpp"
#include "permc3/verify.hpp"

namespace {

// Exit codes: 0 success, 2 parse/input error, 3 outside the third level,
// 4 not semi-Clifford, 5 internal invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotC3 = 3;
constexpr int kExitNotSemiClifford = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw permc3::Error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

uint32_t default_threads() {
    if (const char* env = std::getenv("PERMC3_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return static_cast<uint32_t>(v);
        }
    }
    uint32_t hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

permc3::SignedPermGate load_gate(const std::string& path) {
    return permc3::circuit_to_gate(permc3::parse_circuit(read_file(path)));
}

int cmd_analyze(const std::string& file, int level, bool json) {
    permc3::SignedPermGate gate = load_gate(file);
    std::optional<uint32_t> level_opt;
    if (level > 0) {
        level_opt = static_cast<uint32_t>(level);
    }
    permc3::AnalysisReport report = permc3::analyze_gate(gate, level_opt);
    if (json) {
        std::cout << permc3::analysis_to_json(report).dump(2) << "\n";
    } else {
        std::cout << permc3::analysis_to_text(report);
    }
    return kExitOk;
}

int cmd_anf(const std::string& file, bool json) {
    permc3::SignedPermGate gate = load_gate(file);
    auto polys = gate.permutation().polynomial_representation();
    permc3::AnfPolynomial sign = gate.sign_anf();
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = gate.qubits();
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (const auto& p : polys) {
            coords.push_back({{"anf", p.to_string()}, {"degree", p.degree()}});
        }
        j["coordinates"] = coords;
        j["sign_polynomial"] = sign.to_string();
        j["sign_degree"] = sign.degree();
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < polys.size(); i++) {
            std::cout << "b" << (i + 1) << " = " << polys[i].to_string() << "\n";
        }
        if (sign.degree() > 0 || sign.coeff(0)) {
            std::cout << "sign exponent = " << sign.to_string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_decompose(const std::string& file, const std::string& mode, bool json,
                  const std::string& out_path) {
    permc3::SignedPermGate gate = load_gate(file);
    if (!gate.is_permutation()) {
        throw permc3::UnsupportedGateError(
            "decomposition needs a permutation gate (no phases or signs)");
    }
    const permc3::PermutationGate pi = gate.permutation();

    nlohmann::ordered_json j;
    std::optional<permc3::Decomposition> result;
    int fail_code = kExitOk;
    if (mode == "staircase") {
        auto outcome = permc3::staircase_decomposition(pi);
        if (std::holds_alternative<permc3::Decomposition>(outcome)) {
            result = std::get<permc3::Decomposition>(std::move(outcome));
        } else {
            const auto& w = std::get<permc3::NotC3>(outcome);
            j["status"] = "not-c3";
            nlohmann::ordered_json witness;
            if (w.reason == permc3::NotC3::Reason::kConjugateNotAffine) {
                witness["kind"] = "generator";
                witness["generator"] = "X" + std::to_string(w.index);
            } else {
                witness["kind"] = "coordinate";
                witness["coordinate"] = w.index;
            }
            j["witness"] = witness;
            fail_code = kExitNotC3;
        }
    } else {
        result = permc3::mismatch_free_decomposition(pi);
        if (!result.has_value()) {
            j["status"] = "not-semi-clifford";
            fail_code = kExitNotSemiClifford;
        }
    }

    if (result.has_value()) {
        j["status"] = "ok";
        j["mode"] = mode;
        if (mode == "mismatch-free") {
            auto level = permc3::semi_clifford_level(pi);
            if (level.has_value()) {
                j["level"] = *level;
            }
            auto cert = permc3::semi_clifford_certificate(pi);
            if (cert.has_value()) {
                nlohmann::ordered_json c;
                c["group"] = cert->group.generator_strings();
                std::vector<std::string> image;
                for (const auto& p : cert->image_generators) {
                    image.push_back(p.to_string());
                }
                c["image"] = image;
                j["certificate"] = c;
            }
        }
        j.update(permc3::decomposition_to_json(*result));
        const std::string text = permc3::render_decomposition(*result);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                throw permc3::Error("cannot write " + out_path);
            }
            out << text;
        }
        if (json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text;
        }
        return kExitOk;
    }

    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j["status"].get<std::string>() << "\n";
    }
    return fail_code;
}

int cmd_verify_paper(bool full, uint32_t threads, const std::string& fixtures, bool json) {
    permc3::VerifyOptions options;
    options.full = full;
    options.threads = threads;
    if (!fixtures.empty()) {
        options.fixtures_dir = fixtures;
    }
    auto checks = permc3::verify_paper(options);
    bool all = true;
    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            arr.push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}});
            all = all && c.pass;
        }
        nlohmann::ordered_json j;
        j["checks"] = arr;
        j["all_pass"] = all;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::string head = std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name;
            std::cout << head;
            if (!c.detail.empty()) {
                std::cout << std::string(head.size() < 44 ? 44 - head.size() : 1, ' ')
                          << c.detail;
            }
            std::cout << "\n";
            all = all && c.pass;
        }
        std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all ? kExitOk : 1;
}

int cmd_search6(uint32_t threads, const std::string& out_path, uint64_t sample) {
    permc3::SearchReport report = permc3::run_search(threads);
    nlohmann::ordered_json j = permc3::search_report_to_json(report);
    uint64_t cross_mismatches = 0;
    if (sample > 0) {
        permc3::CrossCheckReport cc = permc3::cross_check_sample(sample, 0x5eed);
        j["cross_check"] = {{"checked", cc.checked}, {"mismatches", cc.mismatches}};
        cross_mismatches = cc.mismatches;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw permc3::Error("cannot write " + out_path);
        }
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    if (!report.failures.empty()) {
        std::cerr << "FAILURE: " << report.failures.size()
                  << " third-level subsets were not certified\n";
        return 1;
    }
    if (cross_mismatches != 0) {
        std::cerr << "FAILURE: cross-check found " << cross_mismatches << " mismatches\n";
        return 1;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of permutation gates in the Clifford hierarchy"};
    app.require_subcommand(1);

    std::string file, mode = "staircase", out_path, fixtures;
    int level = 0;
    bool json = false, full = false;
    uint32_t threads = default_threads();
    uint64_t sample = 0;

    auto* analyze = app.add_subcommand("analyze", "membership tests and polynomial report");
    analyze->add_option("file", file, "circuit file")->required();
    analyze->add_option("--level", level, "also test membership at this level");
    analyze->add_flag("--json", json, "JSON output");

    auto* anf = app.add_subcommand("anf", "polynomial representation only");
    anf->add_option("file", file, "circuit file")->required();
    anf->add_flag("--json", json, "JSON output");

    auto* decompose = app.add_subcommand("decompose", "factor through Clifford permutations");
    decompose->add_option("file", file, "circuit file")->required();
    decompose->add_option("--mode", mode, "staircase | mismatch-free")
        ->check(CLI::IsMember({"staircase", "mismatch-free"}));
    decompose->add_option("--out", out_path, "also write the circuit text here");
    decompose->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify-paper", "run the reference-result checklist");
    verify->add_flag("--full", full, "include the exhaustive six-qubit scan");
    verify->add_option("--fixtures", fixtures, "read reference circuits from this directory");
    verify->add_option("--threads", threads, "worker threads for the scan");
    verify->add_flag("--json", json, "JSON output");

    auto* search = app.add_subcommand("search6", "scan all 2^20 six-qubit staircase subsets");
    search->add_option("--threads", threads, "worker threads");
    search->add_option("--out", out_path, "write the JSON report here");
    search->add_option("--cross-check-sample", sample,
                       "verify this many random subsets against the slow pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            return cmd_analyze(file, level, json);
        }
        if (*anf) {
            return cmd_anf(file, json);
        }
        if (*decompose) {
            return cmd_decompose(file, mode, json, out_path);
        }
        if (*verify) {
            return cmd_verify_paper(full, threads, fixtures, json);
        }
        if (*search) {
            return cmd_search6(threads, out_path, sample);
        }
    } catch (const permc3::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const permc3::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const permc3::UnsupportedGateError& e) {
        std::cerr << "unsupported gate: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
