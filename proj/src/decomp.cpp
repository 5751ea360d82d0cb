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

#include "permc3/decomp.hpp"

#include <algorithm>
#include <bit>

#include "permc3/hierarchy.hpp"

namespace permc3 {

namespace {

// Reduce a mask against an echelon basis of masks (pivot = top set bit).
uint32_t reduce_mask(uint32_t mask, const std::vector<uint32_t>& basis) {
    for (uint32_t b : basis) {
        uint32_t pivot = uint32_t{1} << (std::bit_width(b) - 1);
        if (mask & pivot) {
            mask ^= b;
        }
    }
    return mask;
}

void insert_mask(uint32_t mask, std::vector<uint32_t>& basis) {
    basis.push_back(mask);
    std::sort(basis.begin(), basis.end(), std::greater<>());
}

std::vector<F2Vec> reduced_basis_vectors(uint32_t n, std::vector<uint32_t> masks) {
    // Full reduction so the basis is canonical.
    for (size_t i = 0; i < masks.size(); i++) {
        for (size_t j = 0; j < masks.size(); j++) {
            if (i != j) {
                uint32_t pivot = uint32_t{1} << (std::bit_width(masks[j]) - 1);
                if (masks[i] & pivot) {
                    masks[i] ^= masks[j];
                }
            }
        }
    }
    std::sort(masks.begin(), masks.end(), std::greater<>());
    std::vector<F2Vec> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) {
        out.push_back(F2Vec::from_mask(n, m));
    }
    return out;
}

}  // namespace

ConjugationStabilizer conjugation_stabilizer(const PermutationGate& pi) {
    const uint32_t n = pi.qubits();
    const uint32_t size = pi.table_size();
    ConjugationStabilizer out;

    // X side: pi X^u pi^-1 is a permutation, and it is Pauli exactly when it
    // is a translation. Scan all u, skipping anything already in the span.
    std::vector<uint32_t> x_basis;
    for (uint32_t u = 1; u < size; u++) {
        uint32_t r = reduce_mask(u, x_basis);
        if (r == 0) {
            continue;
        }
        const uint32_t c = pi.apply(r) ^ pi.apply(0);
        bool translation = true;
        for (uint32_t w = 0; w < size; w++) {
            if ((pi.apply(w ^ r) ^ pi.apply(w)) != c) {
                translation = false;
                break;
            }
        }
        if (translation) {
            insert_mask(r, x_basis);
        }
    }

    // Z side: pi Z^v pi^-1 is diagonal with exponent the v-combination of the
    // inverse's coordinates; it is Pauli exactly when that function is affine.
    const PermutationGate piinv = pi.inverse();
    std::vector<PackedBits> coord_anf;
    coord_anf.reserve(n);
    for (uint32_t i = 1; i <= n; i++) {
        PackedBits tbl(size);
        const uint32_t bit = n - i;
        for (uint32_t x = 0; x < size; x++) {
            tbl.set(x, (piinv.apply(x) >> bit) & 1);
        }
        subset_xor_transform(tbl, n);
        coord_anf.push_back(std::move(tbl));
    }
    PackedBits nonaffine(size);
    for (uint32_t m = 0; m < size; m++) {
        nonaffine.set(m, std::popcount(m) >= 2);
    }
    std::vector<uint32_t> z_basis;
    for (uint32_t v = 1; v < size; v++) {
        uint32_t r = reduce_mask(v, z_basis);
        if (r == 0) {
            continue;
        }
        PackedBits combined(size);
        for (uint32_t i = 1; i <= n; i++) {
            if ((r >> (n - i)) & 1) {
                combined ^= coord_anf[i - 1];
            }
        }
        bool affine = true;
        for (size_t w = 0; w < combined.words().size(); w++) {
            if (combined.words()[w] & nonaffine.words()[w]) {
                affine = false;
                break;
            }
        }
        if (affine) {
            insert_mask(r, z_basis);
        }
    }

    out.s_x = reduced_basis_vectors(n, std::move(x_basis));
    out.s_z = reduced_basis_vectors(n, std::move(z_basis));
    return out;
}

std::optional<SemiCliffordCertificate> semi_clifford_certificate(const PermutationGate& pi) {
    const uint32_t n = pi.qubits();
    ConjugationStabilizer cs = conjugation_stabilizer(pi);
    std::vector<SymplecticVec> rows;
    rows.reserve(cs.s_x.size() + cs.s_z.size());
    // Z rows first, so a full stabilizer yields the all-Z certificate.
    for (const auto& v : cs.s_z) {
        rows.push_back(SymplecticVec{F2Vec(n), v});
    }
    for (const auto& u : cs.s_x) {
        rows.push_back(SymplecticVec{u, F2Vec(n)});
    }
    IsotropicResult iso = max_isotropic_within(std::move(rows));
    if (iso.dim < n) {
        return std::nullopt;
    }

    std::vector<Pauli> gens;
    gens.reserve(n);
    for (const auto& r : iso.basis) {
        gens.push_back(Pauli::from_support(r.u, r.v));
    }
    SemiCliffordCertificate cert{PauliSubgroup::from_generators(n, gens), {}, PauliSubgroup(n)};
    if (!cert.group.is_maximal_abelian()) {
        throw InternalInvariantViolation("certificate group is not maximal abelian");
    }
    const SignedPermGate u(pi);
    for (const Pauli& g : cert.group.generators()) {
        auto img = conjugate_pauli(u, g).as_pauli();
        if (!img.has_value()) {
            throw InternalInvariantViolation("certificate generator does not conjugate to Pauli");
        }
        cert.image_generators.push_back(*img);
    }
    cert.image = PauliSubgroup::from_generators(n, cert.image_generators);
    if (!cert.image.is_maximal_abelian()) {
        throw InternalInvariantViolation("certificate image is not maximal abelian");
    }
    return cert;
}

bool is_semi_clifford(const PermutationGate& pi) {
    return semi_clifford_certificate(pi).has_value();
}

PermutationGate clifford_perm_from_x_images(uint32_t n, const std::vector<F2Vec>& images) {
    std::vector<F2Vec> cols = images;
    if (!cols.empty() && F2Matrix::from_rows(cols).rank() != cols.size()) {
        throw PreconditionViolated("images are linearly dependent");
    }
    for (uint32_t j = 1; j <= n && cols.size() < n; j++) {
        cols.push_back(F2Vec::unit(n, j));
        if (F2Matrix::from_rows(cols).rank() != cols.size()) {
            cols.pop_back();
        }
    }
    F2Matrix m = F2Matrix::from_columns(n, cols);
    PermutationGate nu = PermutationGate::affine(m, F2Vec(n));
    const PermutationGate nuinv = nu.inverse();
    for (size_t i = 0; i < images.size(); i++) {
        const uint32_t e = 1u << (n - 1 - static_cast<uint32_t>(i));
        for (uint32_t v = 0; v < nu.table_size(); v++) {
            if (nu.apply(nuinv.apply(v) ^ e) != (v ^ images[i].mask())) {
                throw InternalInvariantViolation("constructed map fails the conjugation identity");
            }
        }
    }
    return nu;
}

namespace {

PermutationGate conjugate_x_generator(const PermutationGate& pi, uint32_t j) {
    const uint32_t n = pi.qubits();
    const uint32_t e = 1u << (n - j);
    std::vector<uint16_t> table(pi.table_size());
    for (uint32_t w = 0; w < pi.table_size(); w++) {
        table[pi.apply(w)] = pi.apply(w ^ e);
    }
    return PermutationGate::from_table(n, std::move(table));
}

PermutationGate compose_gates(const Circuit& mu) {
    return circuit_to_gate(mu).permutation();
}

void verify_recomposition(const PermutationGate& pi, const Decomposition& d) {
    if (!d.left.as_affine().has_value() || !d.right.as_affine().has_value()) {
        throw InternalInvariantViolation("decomposition factors are not affine");
    }
    if (!(d.left * compose_gates(d.middle) * d.right == pi)) {
        throw InternalInvariantViolation("decomposition does not recompose to the input");
    }
}

}  // namespace

std::optional<Decomposition> mismatch_free_decomposition(const PermutationGate& pi0) {
    const uint32_t n = pi0.qubits();

    // Normalize the permutation-stabilizer to <X_1..X_m>.
    ConjugationStabilizer cs0 = conjugation_stabilizer(pi0);
    const uint32_t m = static_cast<uint32_t>(cs0.s_x.size());
    const PermutationGate nu = clifford_perm_from_x_images(n, cs0.s_x);
    PermutationGate pi = pi0 * nu;

    auto cert = semi_clifford_certificate(pi);
    if (!cert.has_value()) {
        return std::nullopt;
    }

    // Extend the certificate group around <X_1..X_m>; the result is forced to
    // be <X_1..X_m, Z_{m+1}..Z_n> up to phase.
    std::vector<Pauli> x_gens;
    for (uint32_t i = 1; i <= m; i++) {
        x_gens.push_back(Pauli::x(n, i));
    }
    PauliSubgroup msub = PauliSubgroup::from_generators(n, x_gens);
    PauliSubgroup aprime = extend_to_maximal_abelian(cert->group, msub);
    std::vector<Pauli> expected_gens = x_gens;
    for (uint32_t j = m + 1; j <= n; j++) {
        expected_gens.push_back(Pauli::z(n, j));
    }
    if (!aprime.same_group_up_to_phase(PauliSubgroup::from_generators(n, expected_gens))) {
        throw InternalInvariantViolation("extended group is not the expected coordinate group");
    }

    // Straighten the X images so the gate commutes with X_1..X_m.
    std::vector<F2Vec> ws;
    for (uint32_t i = 1; i <= m; i++) {
        auto p = conjugate_pauli(SignedPermGate(pi), Pauli::x(n, i)).as_pauli();
        if (!p.has_value() || !p->z_part().is_zero()) {
            throw InternalInvariantViolation("stabilized X generator has a non-translation image");
        }
        ws.push_back(p->x_part());
    }
    const PermutationGate nu2 = clifford_perm_from_x_images(n, ws);
    pi = nu2.inverse() * pi;

    // Fix the signs of the Z images, then straighten their supports.
    F2Vec chi_support(n);
    std::vector<F2Vec> wz(n + 1, F2Vec(n));
    for (uint32_t j = m + 1; j <= n; j++) {
        auto p = conjugate_pauli(SignedPermGate(pi), Pauli::z(n, j)).as_pauli();
        if (!p.has_value() || !p->x_part().is_zero() || (p->phase_exponent() & 1)) {
            throw InternalInvariantViolation("stabilized Z generator has a non-diagonal image");
        }
        if (p->phase_exponent() == 2) {
            chi_support.set(j, true);
        }
        wz[j] = p->z_part();
    }
    const PermutationGate chi = PermutationGate::translation(chi_support);
    pi = pi * chi;

    std::vector<F2Vec> w_cols;
    for (uint32_t i = 1; i <= m; i++) {
        w_cols.push_back(F2Vec::unit(n, i));
    }
    for (uint32_t j = m + 1; j <= n; j++) {
        for (uint32_t i = 1; i <= m; i++) {
            if (wz[j].get(i)) {
                throw InternalInvariantViolation("Z image support meets the X block");
            }
        }
        w_cols.push_back(wz[j]);
    }
    F2Matrix mw = F2Matrix::from_columns(n, w_cols);
    if (!mw.inverse().has_value()) {
        throw InternalInvariantViolation("Z image supports are not independent");
    }
    const PermutationGate varpi = PermutationGate::affine(mw.transpose(), F2Vec(n));
    pi = varpi * pi;

    // The reduced gate commutes with X_1..X_m and Z_{m+1}..Z_n, which pins
    // its coordinates to a_j for j > m and a_j + p_j(controls) for j <= m.
    // Each monomial of p_j is one controlled-X gate.
    Circuit mu;
    mu.n = n;
    for (uint32_t j = 1; j <= n; j++) {
        AnfPolynomial coord = pi.coordinate_anf(j);
        AnfPolynomial rest = coord + AnfPolynomial::variable(n, j);
        if (j > m) {
            if (!rest.is_zero()) {
                throw InternalInvariantViolation("fixed coordinate is not the identity");
            }
            continue;
        }
        const uint32_t allowed = n == m ? 0 : (1u << (n - m)) - 1;  // variables m+1..n
        for (uint32_t mono : rest.monomials()) {
            if (mono & ~allowed) {
                throw InternalInvariantViolation("control monomial uses a target variable");
            }
            std::vector<uint32_t> controls;
            for (uint32_t q = m + 1; q <= n; q++) {
                if ((mono >> (n - q)) & 1) {
                    controls.push_back(q);
                }
            }
            mu.gates.push_back(CircuitGate::controlled_x(std::move(controls), j));
        }
    }
    if (!(compose_gates(mu) == pi)) {
        throw InternalInvariantViolation("gate readout does not rebuild the reduced gate");
    }
    if (!is_mismatch_free(mu)) {
        throw InternalInvariantViolation("factor is not mismatch-free");
    }

    Decomposition d{nu2 * varpi.inverse(), std::move(mu), chi * nu.inverse()};
    verify_recomposition(pi0, d);
    return d;
}

std::optional<uint32_t> semi_clifford_level(const PermutationGate& pi) {
    auto d = mismatch_free_decomposition(pi);
    if (!d.has_value()) {
        return std::nullopt;
    }
    if (is_pauli_gate(SignedPermGate(pi))) {
        return 1;
    }
    if (pi.as_affine().has_value()) {
        return 2;
    }
    uint32_t max_controls = 0;
    for (const auto& g : d->middle.gates) {
        max_controls = std::max(max_controls, static_cast<uint32_t>(g.controls.size()));
    }
    return 1 + max_controls;
}

StaircaseOutcome staircase_decomposition(const PermutationGate& pi0) {
    const uint32_t n = pi0.qubits();

    auto not_c3_generator = [&](uint32_t j) {
        return NotC3{NotC3::Reason::kConjugateNotAffine, j, conjugate_x_generator(pi0, j)};
    };

    // Pin 0 as a fixed point.
    const F2Vec shift = F2Vec::from_mask(n, pi0.apply(0));
    const PermutationGate xl = PermutationGate::translation(shift);
    PermutationGate pi = xl * pi0;

    // Conjugates of the X generators as affine maps v -> v + A_j v + b_j.
    auto extract = [&](const PermutationGate& p, uint32_t j, F2Matrix* a, F2Vec* b) -> bool {
        auto aff = conjugate_x_generator(p, j).as_affine();
        if (!aff.has_value()) {
            return false;
        }
        *a = aff->m + F2Matrix::identity(n);
        *b = aff->w;
        return true;
    };

    std::vector<F2Matrix> mats;
    for (uint32_t j = 1; j <= n; j++) {
        F2Matrix a;
        F2Vec b;
        if (!extract(pi, j, &a, &b)) {
            return not_c3_generator(j);
        }
        mats.push_back(std::move(a));
    }

    // Simultaneously triangularize the A_j.
    const F2Matrix m = simultaneous_strict_lower_triangularize(mats);
    const PermutationGate mu_lin = PermutationGate::affine(m, F2Vec(n));
    pi = mu_lin * pi;

    std::vector<TwistedPair> pairs;
    pairs.reserve(n);
    for (uint32_t j = 1; j <= n; j++) {
        F2Matrix a;
        F2Vec b;
        if (!extract(pi, j, &a, &b)) {
            throw InternalInvariantViolation("conjugate lost affineness under a basis change");
        }
        pairs.push_back(TwistedPair{std::move(a), b});
    }

    auto elim = twisted_gaussian_elimination(std::move(pairs));
    if (std::holds_alternative<ZeroVectorReached>(elim)) {
        // A zero image would force the gate to move 0, which it fixes.
        throw InternalInvariantViolation("elimination reached a zero vector on a 0-fixing gate");
    }
    const TransformRecord record = std::get<TransformRecord>(std::move(elim));
    const PermutationGate nu = clifford_perm_from_x_images(n, record.basis);
    pi = pi * nu;

    for (uint32_t i = 0; i < n; i++) {
        if (pi.apply(1u << i) != (1u << i)) {
            throw InternalInvariantViolation("reduced gate does not fix the basis states");
        }
    }

    // The inverse's coordinates must be a_k plus quadratic monomials whose
    // variables sit strictly below k.
    const PermutationGate piinv = pi.inverse();
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> quad(n + 1);
    for (uint32_t k = 1; k <= n; k++) {
        AnfPolynomial rest = piinv.coordinate_anf(k) + AnfPolynomial::variable(n, k);
        for (uint32_t mono : rest.monomials()) {
            if (std::popcount(mono) != 2) {
                return NotC3{NotC3::Reason::kCoordinateNotQuadratic, k, std::nullopt};
            }
            uint32_t i = n - (std::bit_width(mono) - 1);  // smaller variable index
            uint32_t j = n - std::countr_zero(mono);      // larger variable index
            if (j >= k) {
                return NotC3{NotC3::Reason::kCoordinateNotQuadratic, k, std::nullopt};
            }
            quad[k].emplace_back(i, j);
        }
    }

    // Emitting targets n..1 builds the inverse; the reversal is in staircase
    // form and equals the reduced gate.
    Circuit mu;
    mu.n = n;
    for (uint32_t k = n; k >= 1; k--) {
        for (auto [i, j] : quad[k]) {
            mu.gates.push_back(CircuitGate::controlled_x({i, j}, k));
        }
        if (k == 1) {
            break;
        }
    }
    std::reverse(mu.gates.begin(), mu.gates.end());
    if (!is_staircase(mu)) {
        throw InternalInvariantViolation("emitted factor is not in staircase form");
    }
    if (!(compose_gates(mu) == pi)) {
        throw InternalInvariantViolation("staircase readout does not rebuild the reduced gate");
    }

    Decomposition d{xl * mu_lin.inverse(), std::move(mu), nu.inverse()};
    verify_recomposition(pi0, d);
    return d;
}

}  // namespace permc3
