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

#include "permc3/pauli.hpp"

#include <algorithm>

namespace permc3 {

Pauli::Pauli(uint32_t n) : t_(0), u_(n), v_(n) {}

Pauli::Pauli(uint8_t t, F2Vec u, F2Vec v) : t_(t & 3), u_(std::move(u)), v_(std::move(v)) {
    if (u_.size() != v_.size()) {
        throw PreconditionViolated("X and Z parts must have equal length");
    }
}

Pauli Pauli::x(uint32_t n, uint32_t i) {
    return Pauli(0, F2Vec::unit(n, i), F2Vec(n));
}

Pauli Pauli::y(uint32_t n, uint32_t i) {
    return Pauli(1, F2Vec::unit(n, i), F2Vec::unit(n, i));
}

Pauli Pauli::z(uint32_t n, uint32_t i) {
    return Pauli(0, F2Vec(n), F2Vec::unit(n, i));
}

Pauli Pauli::from_support(const F2Vec& u, const F2Vec& v) {
    return Pauli(0, u, v);
}

Pauli Pauli::operator*(const Pauli& other) const {
    if (size() != other.size()) {
        throw PreconditionViolated("mixed sizes in Pauli product");
    }
    // Z^v X^u' = (-1)^{v.u'} X^u' Z^v, which contributes 2(v.u') to the
    // exponent of i.
    uint8_t t = static_cast<uint8_t>((t_ + other.t_ + 2 * (v_.dot(other.u_) ? 1 : 0)) & 3);
    return Pauli(t, u_ + other.u_, v_ + other.v_);
}

Pauli Pauli::inverse() const {
    uint8_t t = static_cast<uint8_t>((4 - t_ + 2 * (u_.dot(v_) ? 1 : 0)) & 3);
    return Pauli(t, u_, v_);
}

bool Pauli::commutes_with(const Pauli& other) const {
    return u_.dot(other.v_) == v_.dot(other.u_);
}

bool Pauli::is_identity() const {
    return t_ == 0 && is_identity_up_to_phase();
}

std::string Pauli::to_string() const {
    static const char* kPhase[4] = {"", "+i", "-", "-i"};
    std::string s = kPhase[t_];
    bool wrote = false;
    for (uint32_t i = 1; i <= size(); i++) {
        if (u_.get(i)) {
            s += "X" + std::to_string(i);
            wrote = true;
        }
        if (v_.get(i)) {
            s += "Z" + std::to_string(i);
            wrote = true;
        }
    }
    if (!wrote) {
        s += "I";
    }
    return s;
}

namespace {

// Pivot on combined (u|v) coordinates: u components come first.
uint32_t combined_pivot(const Pauli& p) {
    uint32_t n = p.size();
    uint32_t au = p.x_part().alpha();
    if (au <= n) {
        return au;
    }
    uint32_t av = p.z_part().alpha();
    if (av <= n) {
        return n + av;
    }
    return 2 * n + 1;
}

bool combined_get(const Pauli& p, uint32_t c) {
    uint32_t n = p.size();
    return c <= n ? p.x_part().get(c) : p.z_part().get(c - n);
}

// Reduced echelon basis over (u|v) rows, multiplying group elements so the
// phases stay consistent with actual products.
std::vector<Pauli> echelon_basis(std::vector<Pauli> gens) {
    std::vector<Pauli> basis;
    for (Pauli g : gens) {
        for (const Pauli& b : basis) {
            uint32_t piv = combined_pivot(b);
            if (combined_get(g, piv)) {
                g = g * b;
            }
        }
        if (!g.is_identity_up_to_phase()) {
            basis.push_back(g);
            std::sort(basis.begin(), basis.end(), [](const Pauli& a, const Pauli& b) {
                return combined_pivot(a) < combined_pivot(b);
            });
            // Back-substitute to keep each pivot column unique.
            for (size_t i = basis.size(); i-- > 0;) {
                for (size_t k = 0; k < basis.size(); k++) {
                    if (k != i && combined_get(basis[k], combined_pivot(basis[i]))) {
                        basis[k] = basis[k] * basis[i];
                    }
                }
            }
        }
    }
    return basis;
}

}  // namespace

PauliSubgroup::PauliSubgroup(uint32_t n) : n_(n) {}

PauliSubgroup PauliSubgroup::from_generators(uint32_t n, const std::vector<Pauli>& gens) {
    for (const auto& g : gens) {
        if (g.size() != n) {
            throw PreconditionViolated("generator has wrong size");
        }
    }
    PauliSubgroup s(n);
    s.gens_ = echelon_basis(gens);
    return s;
}

bool PauliSubgroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); i++) {
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!gens_[i].commutes_with(gens_[j])) {
                return false;
            }
        }
    }
    return true;
}

bool PauliSubgroup::contains_up_to_phase(const Pauli& p) const {
    Pauli r = p;
    for (const Pauli& b : gens_) {
        if (combined_get(r, combined_pivot(b))) {
            r = r * b;
        }
    }
    return r.is_identity_up_to_phase();
}

bool PauliSubgroup::contains_subgroup(const PauliSubgroup& other) const {
    for (const auto& g : other.gens_) {
        if (!contains_up_to_phase(g)) {
            return false;
        }
    }
    return true;
}

bool PauliSubgroup::same_group_up_to_phase(const PauliSubgroup& other) const {
    if (n_ != other.n_ || gens_.size() != other.gens_.size()) {
        return false;
    }
    for (size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].x_part() != other.gens_[i].x_part() ||
            gens_[i].z_part() != other.gens_[i].z_part()) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> PauliSubgroup::generator_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
        out.push_back(g.to_string());
    }
    return out;
}

PermDiagSplit perm_diag_split(const Pauli& p) {
    const uint32_t n = p.size();
    return PermDiagSplit{Pauli::from_support(p.x_part(), F2Vec(n)),
                         Pauli(p.phase_exponent(), F2Vec(n), p.z_part())};
}

PauliSubgroup extend_to_maximal_abelian(const PauliSubgroup& a, const PauliSubgroup& b) {
    if (!a.is_maximal_abelian()) {
        throw PreconditionViolated("first subgroup must be maximal abelian");
    }
    if (!b.is_abelian()) {
        throw PreconditionViolated("second subgroup must be abelian");
    }
    const uint32_t n = a.size();
    std::vector<Pauli> cur = a.generators();
    for (const Pauli& g : b.generators()) {
        std::vector<Pauli> commuting;
        std::vector<Pauli> anti;
        for (const Pauli& c : cur) {
            (c.commutes_with(g) ? commuting : anti).push_back(c);
        }
        std::vector<Pauli> next = std::move(commuting);
        for (size_t k = 0; k + 1 < anti.size(); k++) {
            next.push_back(anti[k] * anti[k + 1]);
        }
        next.push_back(g);
        cur = std::move(next);
    }
    PauliSubgroup out = PauliSubgroup::from_generators(n, cur);
    if (out.rank() != n || !out.is_abelian()) {
        throw InternalInvariantViolation("extension did not produce a maximal abelian group");
    }
    if (!out.contains_subgroup(b)) {
        throw InternalInvariantViolation("extension lost a generator of the second subgroup");
    }
    std::vector<Pauli> joint = a.generators();
    const auto& bg = b.generators();
    joint.insert(joint.end(), bg.begin(), bg.end());
    if (!PauliSubgroup::from_generators(n, joint).contains_subgroup(out)) {
        throw InternalInvariantViolation("extension escaped the generated group");
    }
    return out;
}

bool symplectic_product(const SymplecticVec& a, const SymplecticVec& b) {
    return a.u.dot(b.v) != a.v.dot(b.u);
}

IsotropicResult max_isotropic_within(std::vector<SymplecticVec> rows) {
    if (rows.empty()) {
        return IsotropicResult{0, {}};
    }
    const uint32_t n = rows.front().u.size();
    {
        // Independence of the (u|v) rows, eliminated as 2n-bit masks.
        std::vector<uint64_t> masks;
        masks.reserve(rows.size());
        for (const auto& r : rows) {
            if (r.u.size() != n || r.v.size() != n) {
                throw PreconditionViolated("mixed sizes in symplectic basis");
            }
            masks.push_back((static_cast<uint64_t>(r.u.mask()) << n) | r.v.mask());
        }
        uint32_t rank = 0;
        for (int bit = 2 * static_cast<int>(n) - 1; bit >= 0; bit--) {
            uint64_t sel = uint64_t{1} << bit;
            size_t pivot = rank;
            while (pivot < masks.size() && !(masks[pivot] & sel)) {
                pivot++;
            }
            if (pivot == masks.size()) {
                continue;
            }
            std::swap(masks[rank], masks[pivot]);
            for (size_t k = 0; k < masks.size(); k++) {
                if (k != rank && (masks[k] & sel)) {
                    masks[k] ^= masks[rank];
                }
            }
            rank++;
        }
        if (rank != rows.size()) {
            throw PreconditionViolated("dependent symplectic basis");
        }
    }

    std::vector<SymplecticVec> remaining = std::move(rows);
    std::vector<SymplecticVec> isotropic;
    std::vector<std::pair<SymplecticVec, SymplecticVec>> pairs;
    while (!remaining.empty()) {
        SymplecticVec a = remaining.front();
        remaining.erase(remaining.begin());
        size_t partner = remaining.size();
        for (size_t k = 0; k < remaining.size(); k++) {
            if (symplectic_product(a, remaining[k])) {
                partner = k;
                break;
            }
        }
        if (partner == remaining.size()) {
            isotropic.push_back(a);
            continue;
        }
        SymplecticVec b = remaining[partner];
        remaining.erase(remaining.begin() + static_cast<long>(partner));
        for (auto& y : remaining) {
            bool cb = symplectic_product(y, b);
            bool ca = symplectic_product(y, a);
            if (cb) {
                y.u += a.u;
                y.v += a.v;
            }
            if (ca) {
                y.u += b.u;
                y.v += b.v;
            }
        }
        pairs.emplace_back(a, b);
    }

    IsotropicResult out;
    out.basis = std::move(isotropic);
    for (const auto& [a, b] : pairs) {
        out.basis.push_back(a);
    }
    out.dim = static_cast<uint32_t>(out.basis.size());
    for (size_t i = 0; i < out.basis.size(); i++) {
        for (size_t j = i + 1; j < out.basis.size(); j++) {
            if (symplectic_product(out.basis[i], out.basis[j])) {
                throw InternalInvariantViolation("isotropic output is not pairwise orthogonal");
            }
        }
    }
    return out;
}

}  // namespace permc3
