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

#include "permc3/gate.hpp"

#include <bit>
#include <numeric>

namespace permc3 {

namespace {

void check_qubits(uint32_t n) {
    if (n > kMaxDimension) {
        throw DimensionTooLarge("qubit count " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxDimension));
    }
}

}  // namespace

PermutationGate::PermutationGate(uint32_t n) : n_(n) {
    check_qubits(n);
    table_.resize(table_size());
    std::iota(table_.begin(), table_.end(), 0);
}

PermutationGate PermutationGate::from_table(uint32_t n, std::vector<uint16_t> table) {
    check_qubits(n);
    if (table.size() != (size_t{1} << n)) {
        throw PreconditionViolated("table length must be 2^n");
    }
    std::vector<bool> seen(table.size(), false);
    for (uint16_t y : table) {
        if (y >= table.size() || seen[y]) {
            throw PreconditionViolated("table is not a bijection");
        }
        seen[y] = true;
    }
    PermutationGate g(n);
    g.table_ = std::move(table);
    return g;
}

PermutationGate PermutationGate::affine(const F2Matrix& m, const F2Vec& w) {
    const uint32_t n = w.size();
    if (m.rows() != n || m.cols() != n) {
        throw PreconditionViolated("affine map shape mismatch");
    }
    if (!m.inverse().has_value()) {
        throw PreconditionViolated("affine map matrix is not invertible");
    }
    PermutationGate g(n);
    for (uint32_t x = 0; x < g.table_size(); x++) {
        g.table_[x] = static_cast<uint16_t>(m.apply(F2Vec::from_mask(n, x)).mask() ^ w.mask());
    }
    return g;
}

PermutationGate PermutationGate::translation(const F2Vec& c) {
    PermutationGate g(c.size());
    for (uint32_t x = 0; x < g.table_size(); x++) {
        g.table_[x] = static_cast<uint16_t>(x ^ c.mask());
    }
    return g;
}

PermutationGate PermutationGate::operator*(const PermutationGate& other) const {
    if (n_ != other.n_) {
        throw PreconditionViolated("mixed sizes in permutation product");
    }
    PermutationGate g(n_);
    for (uint32_t x = 0; x < table_size(); x++) {
        g.table_[x] = table_[other.table_[x]];
    }
    return g;
}

PermutationGate PermutationGate::inverse() const {
    PermutationGate g(n_);
    for (uint32_t x = 0; x < table_size(); x++) {
        g.table_[table_[x]] = static_cast<uint16_t>(x);
    }
    return g;
}

bool PermutationGate::is_identity() const {
    for (uint32_t x = 0; x < table_size(); x++) {
        if (table_[x] != x) {
            return false;
        }
    }
    return true;
}

AnfPolynomial PermutationGate::coordinate_anf(uint32_t i) const {
    if (i < 1 || i > n_) {
        throw PreconditionViolated("coordinate index out of range");
    }
    PackedBits tbl(table_size());
    const uint32_t bit = n_ - i;
    for (uint32_t x = 0; x < table_size(); x++) {
        tbl.set(x, (table_[x] >> bit) & 1);
    }
    return AnfPolynomial::from_truth_table(n_, tbl);
}

std::vector<AnfPolynomial> PermutationGate::polynomial_representation() const {
    std::vector<AnfPolynomial> out;
    out.reserve(n_);
    for (uint32_t i = 1; i <= n_; i++) {
        out.push_back(coordinate_anf(i));
    }
    return out;
}

std::optional<AffineForm> PermutationGate::as_affine() const {
    const F2Vec w = F2Vec::from_mask(n_, table_[0]);
    std::vector<F2Vec> cols;
    cols.reserve(n_);
    for (uint32_t i = 1; i <= n_; i++) {
        uint32_t e = 1u << (n_ - i);
        cols.push_back(F2Vec::from_mask(n_, table_[e] ^ w.mask()));
    }
    F2Matrix m = F2Matrix::from_columns(n_, cols);
    for (uint32_t x = 0; x < table_size(); x++) {
        if ((m.apply(F2Vec::from_mask(n_, x)).mask() ^ w.mask()) != table_[x]) {
            return std::nullopt;
        }
    }
    return AffineForm{std::move(m), w};
}

PermutationGate PermutationGate::extended_with_inert_qubits(uint32_t m) const {
    check_qubits(n_ + m);
    PermutationGate g(n_ + m);
    const uint32_t low_mask = (1u << m) - 1;
    for (uint32_t x = 0; x < g.table_size(); x++) {
        g.table_[x] = static_cast<uint16_t>((uint32_t{table_[x >> m]} << m) | (x & low_mask));
    }
    return g;
}

SignedPermGate::SignedPermGate(uint32_t n) : perm_(n), sign_(uint64_t{1} << n), t_(0) {}

SignedPermGate::SignedPermGate(PermutationGate perm)
    : perm_(std::move(perm)), sign_(uint64_t{1} << perm_.qubits()), t_(0) {}

SignedPermGate::SignedPermGate(PermutationGate perm, PackedBits sign, uint8_t t)
    : perm_(std::move(perm)), sign_(std::move(sign)), t_(t & 3) {
    if (sign_.size() != perm_.table_size()) {
        throw PreconditionViolated("sign table length must be 2^n");
    }
    // (f, t) and (f^1, t+2) encode the same operator; pin f(0) = 0 so field
    // comparison is operator equality.
    if (sign_.get(0)) {
        sign_.flip_all();
        t_ = static_cast<uint8_t>((t_ + 2) & 3);
    }
}

SignedPermGate SignedPermGate::from_pauli(const Pauli& p) {
    const uint32_t n = p.size();
    PackedBits sign(uint64_t{1} << n);
    for (uint32_t x = 0; x < (1u << n); x++) {
        sign.set(x, std::popcount(p.z_part().mask() & x) & 1);
    }
    return SignedPermGate(PermutationGate::translation(p.x_part()), std::move(sign),
                          p.phase_exponent());
}

SignedPermGate SignedPermGate::diagonal(uint32_t n, const PackedBits& sign) {
    return SignedPermGate(PermutationGate(n), sign, 0);
}

SignedPermGate SignedPermGate::operator*(const SignedPermGate& other) const {
    if (qubits() != other.qubits()) {
        throw PreconditionViolated("mixed sizes in gate product");
    }
    PermutationGate perm = perm_ * other.perm_;
    PackedBits sign(sign_.size());
    for (uint32_t x = 0; x < perm_.table_size(); x++) {
        sign.set(x, other.sign_.get(x) ^ sign_.get(other.perm_.apply(x)));
    }
    return SignedPermGate(std::move(perm), std::move(sign),
                          static_cast<uint8_t>((t_ + other.t_) & 3));
}

SignedPermGate SignedPermGate::inverse() const {
    PermutationGate inv = perm_.inverse();
    PackedBits sign(sign_.size());
    for (uint32_t x = 0; x < perm_.table_size(); x++) {
        sign.set(x, sign_.get(inv.apply(x)));
    }
    return SignedPermGate(std::move(inv), std::move(sign), static_cast<uint8_t>((4 - t_) & 3));
}

std::pair<uint32_t, uint8_t> SignedPermGate::apply(uint32_t index) const {
    return {perm_.apply(index), static_cast<uint8_t>((t_ + 2 * (sign_.get(index) ? 1 : 0)) & 3)};
}

bool SignedPermGate::is_identity() const {
    return t_ == 0 && !sign_.any() && perm_.is_identity();
}

AnfPolynomial SignedPermGate::sign_anf() const {
    return AnfPolynomial::from_truth_table(qubits(), sign_);
}

std::optional<Pauli> SignedPermGate::as_pauli() const {
    const uint32_t n = qubits();
    const uint32_t u = perm_.apply(0);
    for (uint32_t x = 0; x < perm_.table_size(); x++) {
        if (perm_.apply(x) != (x ^ u)) {
            return std::nullopt;
        }
    }
    AnfPolynomial f = sign_anf();
    if (f.degree() > 1) {
        return std::nullopt;
    }
    uint32_t v = 0;
    for (uint32_t i = 1; i <= n; i++) {
        if (f.coeff(1u << (n - i))) {
            v |= 1u << (n - i);
        }
    }
    const bool constant = f.coeff(0);
    const uint8_t t = static_cast<uint8_t>((t_ + (constant ? 2 : 0)) & 3);
    return Pauli(t, F2Vec::from_mask(n, u), F2Vec::from_mask(n, v));
}

SignedPermGate SignedPermGate::extended_with_inert_qubits(uint32_t m) const {
    PermutationGate perm = perm_.extended_with_inert_qubits(m);
    PackedBits sign(uint64_t{1} << perm.qubits());
    for (uint32_t x = 0; x < perm.table_size(); x++) {
        sign.set(x, sign_.get(x >> m));
    }
    return SignedPermGate(std::move(perm), std::move(sign), t_);
}

SignedPermGate conjugate_pauli(const SignedPermGate& u, const Pauli& p) {
    if (u.qubits() != p.size()) {
        throw PreconditionViolated("mixed sizes in conjugation");
    }
    return u * SignedPermGate::from_pauli(p) * u.inverse();
}

}  // namespace permc3
