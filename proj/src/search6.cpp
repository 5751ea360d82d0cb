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

#include "permc3/search6.hpp"

#include <bit>
#include <chrono>
#include <thread>

#include "permc3/decomp.hpp"
#include "permc3/hierarchy.hpp"

namespace permc3 {

namespace {

constexpr uint32_t kNumGates = 20;
constexpr uint32_t kMaskCount = 1u << kNumGates;
constexpr uint32_t kChunkBits = 12;

std::array<Toffoli6, kNumGates> make_universe() {
    std::array<Toffoli6, kNumGates> u{};
    size_t g = 0;
    for (uint8_t t = 3; t <= 6; t++) {
        for (uint8_t c2 = 2; c2 < t; c2++) {
            for (uint8_t c1 = 1; c1 < c2; c1++) {
                u[g++] = Toffoli6{c1, c2, t};
            }
        }
    }
    return u;
}

// Qubit q of a 6-bit index sits at bit 6-q.
constexpr uint32_t qubit_bit(uint32_t q) {
    return 6 - q;
}

struct GateWords {
    uint8_t c1_bit, c2_bit, t_bit;
    uint32_t control_qubits;  // set of control qubits, bit q
    uint32_t target_qubit;    // bit q of the target
};

struct Tables {
    std::array<Toffoli6, kNumGates> universe = make_universe();
    std::array<GateWords, kNumGates> words{};
    std::array<uint64_t, 6> initial{};  // initial slice of each index bit
    uint64_t deg1_mask = 0;             // table positions with popcount <= 1
    uint64_t deg2_mask = 0;

    Tables() {
        for (size_t g = 0; g < kNumGates; g++) {
            const Toffoli6& tof = universe[g];
            words[g] = GateWords{static_cast<uint8_t>(qubit_bit(tof.c1)),
                                 static_cast<uint8_t>(qubit_bit(tof.c2)),
                                 static_cast<uint8_t>(qubit_bit(tof.t)),
                                 (1u << tof.c1) | (1u << tof.c2), 1u << tof.t};
        }
        for (uint32_t b = 0; b < 6; b++) {
            uint64_t w = 0;
            for (uint32_t x = 0; x < 64; x++) {
                if ((x >> b) & 1) {
                    w |= uint64_t{1} << x;
                }
            }
            initial[b] = w;
        }
        for (uint32_t m = 0; m < 64; m++) {
            if (std::popcount(m) <= 1) {
                deg1_mask |= uint64_t{1} << m;
            }
            if (std::popcount(m) <= 2) {
                deg2_mask |= uint64_t{1} << m;
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// Subset-XOR transform of a 64-entry table packed in one word.
inline uint64_t transform64(uint64_t w) {
    w ^= (w & 0x5555555555555555ull) << 1;
    w ^= (w & 0x3333333333333333ull) << 2;
    w ^= (w & 0x0f0f0f0f0f0f0f0full) << 4;
    w ^= (w & 0x00ff00ff00ff00ffull) << 8;
    w ^= (w & 0x0000ffff0000ffffull) << 16;
    w ^= (w & 0x00000000ffffffffull) << 32;
    return w;
}

struct SlicedPerm {
    std::array<uint64_t, 6> slice;  // slice[b] bit x = bit b of pi(x)
    std::array<uint8_t, 64> tab;
    std::array<uint8_t, 64> inv;
};

void build_sliced(uint32_t mask, SlicedPerm* out) {
    const Tables& t = tables();
    out->slice = t.initial;
    uint32_t rest = mask;
    while (rest) {
        const uint32_t g = static_cast<uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        const GateWords& w = t.words[g];
        out->slice[w.t_bit] ^= out->slice[w.c1_bit] & out->slice[w.c2_bit];
    }
    for (uint32_t x = 0; x < 64; x++) {
        uint32_t y = 0;
        for (uint32_t b = 0; b < 6; b++) {
            y |= static_cast<uint32_t>((out->slice[b] >> x) & 1) << b;
        }
        out->tab[x] = static_cast<uint8_t>(y);
        out->inv[y] = static_cast<uint8_t>(x);
    }
}

struct SubgroupGen {
    bool is_x;
    uint32_t support;  // index mask (qubit q at bit 6-q)
};

struct SubgroupSpec {
    std::array<SubgroupGen, 6> gens;
};

uint32_t support_mask(std::initializer_list<uint32_t> qubits) {
    uint32_t m = 0;
    for (uint32_t q : qubits) {
        m |= 1u << qubit_bit(q);
    }
    return m;
}

const std::array<SubgroupSpec, 5>& subgroup_specs() {
    static const std::array<SubgroupSpec, 5> specs = [] {
        auto zg = [](std::initializer_list<uint32_t> qs) {
            return SubgroupGen{false, support_mask(qs)};
        };
        auto xg = [](std::initializer_list<uint32_t> qs) {
            return SubgroupGen{true, support_mask(qs)};
        };
        std::array<SubgroupSpec, 5> s{};
        s[0] = SubgroupSpec{{zg({1}), zg({2}), zg({3, 4}), xg({3, 4}), xg({5}), xg({6})}};
        s[1] = SubgroupSpec{{zg({1}), zg({2}), zg({3}), zg({4, 5}), xg({4, 5}), xg({6})}};
        s[2] = SubgroupSpec{{zg({1}), zg({2}), zg({3, 5}), zg({4}), xg({3, 5}), xg({6})}};
        s[3] = SubgroupSpec{{zg({1}), zg({2}), zg({3, 5}), zg({4, 5}), xg({3, 4, 5}), xg({6})}};
        s[4] = SubgroupSpec{{zg({1}), zg({2}), zg({3, 4}), zg({5}), xg({3, 4}), xg({6})}};
        return s;
    }();
    return specs;
}

}  // namespace

const std::array<Toffoli6, 20>& toffoli_universe6() {
    return tables().universe;
}

Circuit mask_to_circuit(uint32_t mask) {
    Circuit c;
    c.n = 6;
    const auto& u = toffoli_universe6();
    for (uint32_t g = 0; g < kNumGates; g++) {
        if ((mask >> g) & 1) {
            c.gates.push_back(CircuitGate::controlled_x({u[g].c1, u[g].c2}, u[g].t));
        }
    }
    return c;
}

PermutationGate build_perm6(uint32_t mask) {
    SlicedPerm p;
    build_sliced(mask, &p);
    std::vector<uint16_t> table(64);
    for (uint32_t x = 0; x < 64; x++) {
        table[x] = p.tab[x];
    }
    return PermutationGate::from_table(6, std::move(table));
}

const std::array<PauliSubgroup, 5>& certification_subgroups() {
    static const std::array<PauliSubgroup, 5> groups = [] {
        std::array<PauliSubgroup, 5> out = {PauliSubgroup(6), PauliSubgroup(6), PauliSubgroup(6),
                                            PauliSubgroup(6), PauliSubgroup(6)};
        const auto& specs = subgroup_specs();
        for (size_t s = 0; s < specs.size(); s++) {
            std::vector<Pauli> gens;
            for (const auto& g : specs[s].gens) {
                F2Vec support = F2Vec::from_mask(6, g.support);
                gens.push_back(g.is_x ? Pauli::from_support(support, F2Vec(6))
                                      : Pauli::from_support(F2Vec(6), support));
            }
            out[s] = PauliSubgroup::from_generators(6, gens);
            if (!out[s].is_maximal_abelian()) {
                throw InternalInvariantViolation("certification subgroup is not maximal abelian");
            }
        }
        return out;
    }();
    return groups;
}

MaskOutcome classify_mask(uint32_t mask) {
    const Tables& t = tables();
    SlicedPerm p;
    build_sliced(mask, &p);

    // Coordinate polynomials of the inverse; the Z-generator conjugates are
    // their combinations and need degree <= 2.
    std::array<uint64_t, 6> inv_anf{};
    {
        std::array<uint64_t, 6> invw{};
        for (uint32_t x = 0; x < 64; x++) {
            const uint32_t v = p.inv[x];
            for (uint32_t b = 0; b < 6; b++) {
                invw[b] |= static_cast<uint64_t>((v >> b) & 1) << x;
            }
        }
        for (uint32_t b = 0; b < 6; b++) {
            inv_anf[b] = transform64(invw[b]);
            if (inv_anf[b] & ~t.deg2_mask) {
                return MaskOutcome{MaskClass::kNotC3, -1};
            }
        }
    }

    // X-generator conjugates must be affine permutations.
    for (uint32_t b = 0; b < 6; b++) {
        const uint32_t e = 1u << b;
        std::array<uint64_t, 6> tw{};
        for (uint32_t v = 0; v < 64; v++) {
            const uint32_t y = p.tab[p.inv[v] ^ e];
            for (uint32_t c = 0; c < 6; c++) {
                tw[c] |= static_cast<uint64_t>((y >> c) & 1) << v;
            }
        }
        for (uint32_t c = 0; c < 6; c++) {
            if (transform64(tw[c]) & ~t.deg1_mask) {
                return MaskOutcome{MaskClass::kNotC3, -1};
            }
        }
    }

    // Mismatch-free test on the selected descriptors.
    uint32_t controls = 0;
    uint32_t targets = 0;
    uint32_t rest = mask;
    while (rest) {
        const uint32_t g = static_cast<uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        controls |= t.words[g].control_qubits;
        targets |= t.words[g].target_qubit;
    }
    if ((controls & targets) == 0) {
        return MaskOutcome{MaskClass::kC3MismatchFree, -1};
    }

    // Certification: each generator's conjugate must be Pauli. Z-type needs
    // an affine combination of inverse coordinates; X-type a translation.
    const auto& specs = subgroup_specs();
    for (size_t s = 0; s < specs.size(); s++) {
        bool ok = true;
        for (const auto& g : specs[s].gens) {
            if (!g.is_x) {
                uint64_t anf = 0;
                for (uint32_t b = 0; b < 6; b++) {
                    if ((g.support >> b) & 1) {
                        anf ^= inv_anf[b];
                    }
                }
                if (anf & ~t.deg1_mask) {
                    ok = false;
                    break;
                }
            } else {
                const uint32_t c = p.tab[p.inv[0] ^ g.support];
                for (uint32_t v = 0; v < 64; v++) {
                    if (p.tab[p.inv[v] ^ g.support] != (v ^ c)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    break;
                }
            }
        }
        if (ok) {
            return MaskOutcome{MaskClass::kC3Certified, static_cast<int>(s)};
        }
    }
    return MaskOutcome{MaskClass::kC3Uncertified, -1};
}

namespace {

struct ChunkReport {
    uint64_t c3 = 0;
    uint64_t mismatch_free = 0;
    std::array<uint64_t, 5> certified{};
    std::vector<uint32_t> failures;
};

void scan_chunk(uint32_t chunk, ChunkReport* out) {
    const uint32_t begin = chunk << kChunkBits;
    const uint32_t end = begin + (1u << kChunkBits);
    // TODO: if the scan ever needs to grow past 2^20, walk masks in Gray-code
    // order and toggle one gate per step instead of rebuilding the slices.
    for (uint32_t mask = begin; mask < end; mask++) {
        MaskOutcome o = classify_mask(mask);
        switch (o.cls) {
            case MaskClass::kNotC3:
                break;
            case MaskClass::kC3MismatchFree:
                out->c3++;
                out->mismatch_free++;
                break;
            case MaskClass::kC3Certified:
                out->c3++;
                out->certified[static_cast<size_t>(o.subgroup)]++;
                break;
            case MaskClass::kC3Uncertified:
                out->c3++;
                out->failures.push_back(mask);
                break;
        }
    }
}

}  // namespace

SearchReport run_search(uint32_t threads) {
    if (threads == 0) {
        threads = 1;
    }
    certification_subgroups();  // assert maximality before scanning
    const auto start = std::chrono::steady_clock::now();
    const uint32_t num_chunks = kMaskCount >> kChunkBits;
    std::vector<ChunkReport> chunks(num_chunks);
    if (threads == 1) {
        for (uint32_t c = 0; c < num_chunks; c++) {
            scan_chunk(c, &chunks[c]);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (uint32_t w = 0; w < threads; w++) {
            pool.emplace_back([&chunks, num_chunks, threads, w] {
                for (uint32_t c = w; c < num_chunks; c += threads) {
                    scan_chunk(c, &chunks[c]);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    SearchReport report;
    report.total = kMaskCount;
    report.threads = threads;
    for (const auto& c : chunks) {
        report.c3_count += c.c3;
        report.mismatch_free_count += c.mismatch_free;
        for (size_t s = 0; s < 5; s++) {
            report.certified_by[s] += c.certified[s];
        }
        report.failures.insert(report.failures.end(), c.failures.begin(), c.failures.end());
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CrossCheckReport cross_check_sample(uint64_t samples, uint64_t seed) {
    CrossCheckReport out;
    uint64_t state = seed;
    auto next = [&state]() {
        // splitmix64
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (uint64_t k = 0; k < samples; k++) {
        const uint32_t mask = static_cast<uint32_t>(next() & (kMaskCount - 1));
        const MaskOutcome fast = classify_mask(mask);
        const PermutationGate pi = build_perm6(mask);
        out.checked++;

        const bool slow_c3 = is_c3_gate(SignedPermGate(pi));
        const bool fast_c3 = fast.cls != MaskClass::kNotC3;
        if (slow_c3 != fast_c3) {
            out.mismatches++;
            continue;
        }
        if (!fast_c3) {
            continue;
        }
        auto cert = semi_clifford_certificate(pi);
        if (!cert.has_value()) {
            out.mismatches++;
            continue;
        }
        if (fast.cls == MaskClass::kC3MismatchFree && !is_mismatch_free(mask_to_circuit(mask))) {
            out.mismatches++;
        }
    }
    return out;
}

}  // namespace permc3
