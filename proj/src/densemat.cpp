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

#include "permc3/densemat.hpp"

#include <bit>


namespace permc3 {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw IntegerOverflow("64-bit addition overflow");
    }
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw IntegerOverflow("64-bit multiplication overflow");
    }
    return out;
}

}  // namespace

ScaledIntMatrix::ScaledIntMatrix(uint32_t dim, int scale)
    : dim_(dim), scale_(scale), data_(static_cast<size_t>(dim) * dim, 0) {}

ScaledIntMatrix ScaledIntMatrix::identity(uint32_t dim) {
    ScaledIntMatrix m(dim, 0);
    for (uint32_t i = 0; i < dim; i++) {
        m.data_[static_cast<size_t>(i) * dim + i] = 1;
    }
    return m;
}

void ScaledIntMatrix::canonicalize() {
    bool all_zero = true;
    for (int64_t v : data_) {
        if (v != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        scale_ = 0;
        return;
    }
    while (scale_ >= 2) {
        bool all_even = true;
        for (int64_t v : data_) {
            if (v & 1) {
                all_even = false;
                break;
            }
        }
        if (!all_even) {
            break;
        }
        for (int64_t& v : data_) {
            v /= 2;
        }
        scale_ -= 2;
    }
}

ScaledIntMatrix ScaledIntMatrix::from_signed_perm(const SignedPermGate& u) {
    if (u.phase_exponent() & 1) {
        throw PreconditionViolated("gate has an imaginary global phase");
    }
    const int64_t global = u.phase_exponent() == 2 ? -1 : 1;
    ScaledIntMatrix m(1u << u.qubits(), 0);
    for (uint32_t c = 0; c < m.dim_; c++) {
        int64_t v = u.sign_table().get(c) ? -global : global;
        m.data_[static_cast<size_t>(u.permutation().apply(c)) * m.dim_ + c] = v;
    }
    return m;
}

ScaledIntMatrix ScaledIntMatrix::pauli_matrix(const F2Vec& u, const F2Vec& v) {
    return from_signed_perm(SignedPermGate::from_pauli(Pauli::from_support(u, v)));
}

ScaledIntMatrix ScaledIntMatrix::from_circuit(const Circuit& c) {
    if (c.n > 7) {
        throw DimensionTooLarge("dense matrices are limited to 7 qubits");
    }
    const uint32_t dim = 1u << c.n;
    ScaledIntMatrix acc = identity(dim);
    for (const auto& g : c.gates) {
        ScaledIntMatrix gm(dim, 0);
        if (g.kind == CircuitGate::Kind::kHadamard) {
            const uint32_t qb = 1u << (c.n - g.target);
            gm.scale_ = 1;
            for (uint32_t r = 0; r < dim; r++) {
                for (uint32_t col = 0; col < dim; col++) {
                    if ((r & ~qb) != (col & ~qb)) {
                        continue;
                    }
                    gm.data_[static_cast<size_t>(r) * dim + col] =
                        ((r & qb) && (col & qb)) ? -1 : 1;
                }
            }
        } else {
            Circuit one{c.n, {g}};
            gm = from_signed_perm(circuit_to_gate(one));
        }
        acc = gm * acc;
    }
    if (!acc.is_unitary()) {
        throw InternalInvariantViolation("circuit matrix failed the unitarity check");
    }
    return acc;
}

ScaledIntMatrix ScaledIntMatrix::operator*(const ScaledIntMatrix& other) const {
    if (dim_ != other.dim_) {
        throw PreconditionViolated("dimension mismatch in matrix product");
    }
    ScaledIntMatrix out(dim_, scale_ + other.scale_);
    for (uint32_t i = 0; i < dim_; i++) {
        for (uint32_t k = 0; k < dim_; k++) {
            int64_t a = at(i, k);
            if (a == 0) {
                continue;
            }
            for (uint32_t j = 0; j < dim_; j++) {
                int64_t b = other.at(k, j);
                if (b == 0) {
                    continue;
                }
                size_t idx = static_cast<size_t>(i) * dim_ + j;
                out.data_[idx] = checked_add(out.data_[idx], checked_mul(a, b));
            }
        }
    }
    out.canonicalize();
    return out;
}

ScaledIntMatrix ScaledIntMatrix::negated() const {
    ScaledIntMatrix out = *this;
    for (int64_t& v : out.data_) {
        v = -v;
    }
    return out;
}

ScaledIntMatrix ScaledIntMatrix::transpose() const {
    ScaledIntMatrix out(dim_, scale_);
    for (uint32_t i = 0; i < dim_; i++) {
        for (uint32_t j = 0; j < dim_; j++) {
            out.data_[static_cast<size_t>(j) * dim_ + i] = at(i, j);
        }
    }
    return out;
}

ScaledIntMatrix ScaledIntMatrix::inverse() const {
    if (!is_unitary()) {
        throw PreconditionViolated("inverse is only available for unitary matrices");
    }
    return transpose();
}

bool ScaledIntMatrix::is_unitary() const {
    if (scale_ < 0) {
        return false;
    }
    // E E^T must equal 2^s I; guard the shift.
    if (scale_ >= 62) {
        throw IntegerOverflow("scale too large for the unitarity check");
    }
    const int64_t target = int64_t{1} << scale_;
    for (uint32_t i = 0; i < dim_; i++) {
        for (uint32_t j = i; j < dim_; j++) {
            int64_t acc = 0;
            for (uint32_t k = 0; k < dim_; k++) {
                acc = checked_add(acc, checked_mul(at(i, k), at(j, k)));
            }
            if (acc != (i == j ? target : 0)) {
                return false;
            }
        }
    }
    return true;
}

bool ScaledIntMatrix::equals_exact(const ScaledIntMatrix& other) const {
    ScaledIntMatrix a = *this;
    ScaledIntMatrix b = other;
    a.canonicalize();
    b.canonicalize();
    return a.dim_ == b.dim_ && a.scale_ == b.scale_ && a.data_ == b.data_;
}

bool ScaledIntMatrix::equals_up_to_sign(const ScaledIntMatrix& other) const {
    return equals_exact(other) || equals_exact(other.negated());
}

bool dense_is_pauli(const ScaledIntMatrix& m) {
    ScaledIntMatrix c = m;
    c.canonicalize();
    if (c.scale() != 0) {
        return false;
    }
    const uint32_t dim = c.dim();
    const uint32_t n = static_cast<uint32_t>(std::bit_width(dim) - 1);
    std::vector<uint32_t> row_of(dim);
    std::vector<bool> neg(dim);
    for (uint32_t col = 0; col < dim; col++) {
        uint32_t found = dim;
        for (uint32_t r = 0; r < dim; r++) {
            int64_t v = c.at(r, col);
            if (v == 0) {
                continue;
            }
            if ((v != 1 && v != -1) || found != dim) {
                return false;
            }
            found = r;
            neg[col] = v < 0;
        }
        if (found == dim) {
            return false;
        }
        row_of[col] = found;
    }
    const uint32_t u = row_of[0];
    for (uint32_t col = 0; col < dim; col++) {
        if (row_of[col] != (col ^ u)) {
            return false;
        }
    }
    PackedBits signs(dim);
    for (uint32_t col = 0; col < dim; col++) {
        signs.set(col, neg[col]);
    }
    return AnfPolynomial::from_truth_table(n, signs).degree() <= 1;
}

namespace {

bool dense_conjugates_pass(const ScaledIntMatrix& m, bool (*check)(const ScaledIntMatrix&)) {
    if (!m.is_unitary()) {
        return false;
    }
    const uint32_t dim = m.dim();
    const uint32_t n = static_cast<uint32_t>(std::bit_width(dim) - 1);
    const ScaledIntMatrix minv = m.inverse();
    for (uint32_t pass = 0; pass < 2; pass++) {
        for (uint32_t i = 1; i <= n; i++) {
            F2Vec support = F2Vec::unit(n, i);
            ScaledIntMatrix p = pass == 0 ? ScaledIntMatrix::pauli_matrix(support, F2Vec(n))
                                          : ScaledIntMatrix::pauli_matrix(F2Vec(n), support);
            if (!check(m * p * minv)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool dense_is_clifford(const ScaledIntMatrix& m) {
    if (m.dim() > 32) {
        throw DimensionTooLarge("dense Clifford oracle is limited to 5 qubits");
    }
    return dense_conjugates_pass(m, dense_is_pauli);
}

bool dense_is_c3(const ScaledIntMatrix& m) {
    if (m.dim() > 16) {
        throw DimensionTooLarge("dense third-level oracle is limited to 4 qubits");
    }
    return dense_conjugates_pass(m, dense_is_clifford);
}

}  // namespace permc3
