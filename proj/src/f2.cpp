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

#include "permc3/f2.hpp"

#include <algorithm>
#include <bit>

namespace permc3 {

namespace {

void check_dimension(uint32_t n) {
    if (n > kMaxDimension) {
        throw DimensionTooLarge("dimension " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxDimension));
    }
}

void check_same_size(const F2Vec& a, const F2Vec& b) {
    if (a.size() != b.size()) {
        throw PreconditionViolated("mixed vector lengths");
    }
}

}  // namespace

F2Vec::F2Vec(uint32_t n) : bits_(0), n_(n) {
    check_dimension(n);
}

F2Vec F2Vec::from_mask(uint32_t n, uint32_t mask) {
    check_dimension(n);
    if (n < 32 && mask >> n) {
        throw PreconditionViolated("mask has bits beyond the vector length");
    }
    F2Vec v(n);
    v.bits_ = mask;
    return v;
}

F2Vec F2Vec::unit(uint32_t n, uint32_t i) {
    F2Vec v(n);
    v.set(i, true);
    return v;
}

bool F2Vec::get(uint32_t i) const {
    if (i < 1 || i > n_) {
        throw PreconditionViolated("vector index out of range");
    }
    return (bits_ >> (n_ - i)) & 1u;
}

F2Vec& F2Vec::set(uint32_t i, bool value) {
    if (i < 1 || i > n_) {
        throw PreconditionViolated("vector index out of range");
    }
    uint32_t bit = 1u << (n_ - i);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
    return *this;
}

uint32_t F2Vec::weight() const {
    return static_cast<uint32_t>(std::popcount(bits_));
}

uint32_t F2Vec::alpha() const {
    if (bits_ == 0) {
        return n_ + 1;
    }
    return n_ - (std::bit_width(bits_) - 1);
}

bool F2Vec::dot(const F2Vec& other) const {
    check_same_size(*this, other);
    return std::popcount(bits_ & other.bits_) & 1;
}

F2Vec F2Vec::operator+(const F2Vec& other) const {
    F2Vec out = *this;
    out += other;
    return out;
}

F2Vec& F2Vec::operator+=(const F2Vec& other) {
    check_same_size(*this, other);
    bits_ ^= other.bits_;
    return *this;
}

std::string F2Vec::to_string() const {
    std::string s;
    s.reserve(n_);
    for (uint32_t i = 1; i <= n_; i++) {
        s.push_back(get(i) ? '1' : '0');
    }
    return s;
}

uint32_t alpha(const F2Vec& v) {
    return v.alpha();
}

F2Matrix::F2Matrix(uint32_t rows, uint32_t cols)
    : rows_n_(rows), cols_n_(cols), rows_(rows, F2Vec(cols)) {
    check_dimension(rows);
    check_dimension(cols);
}

F2Matrix F2Matrix::identity(uint32_t n) {
    F2Matrix m(n, n);
    for (uint32_t i = 1; i <= n; i++) {
        m.set(i, i, true);
    }
    return m;
}

F2Matrix F2Matrix::from_rows(std::vector<F2Vec> rows) {
    if (rows.empty()) {
        throw PreconditionViolated("matrix needs at least one row");
    }
    uint32_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw PreconditionViolated("ragged rows");
        }
    }
    F2Matrix m(static_cast<uint32_t>(rows.size()), cols);
    m.rows_ = std::move(rows);
    return m;
}

F2Matrix F2Matrix::from_columns(uint32_t rows, const std::vector<F2Vec>& cols) {
    F2Matrix m(rows, static_cast<uint32_t>(cols.size()));
    for (uint32_t j = 0; j < cols.size(); j++) {
        if (cols[j].size() != rows) {
            throw PreconditionViolated("column has wrong length");
        }
        for (uint32_t i = 1; i <= rows; i++) {
            m.set(i, j + 1, cols[j].get(i));
        }
    }
    return m;
}

bool F2Matrix::get(uint32_t i, uint32_t j) const {
    return row(i).get(j);
}

F2Matrix& F2Matrix::set(uint32_t i, uint32_t j, bool value) {
    if (i < 1 || i > rows_n_) {
        throw PreconditionViolated("row index out of range");
    }
    rows_[i - 1].set(j, value);
    return *this;
}

const F2Vec& F2Matrix::row(uint32_t i) const {
    if (i < 1 || i > rows_n_) {
        throw PreconditionViolated("row index out of range");
    }
    return rows_[i - 1];
}

F2Vec F2Matrix::column(uint32_t j) const {
    F2Vec c(rows_n_);
    for (uint32_t i = 1; i <= rows_n_; i++) {
        c.set(i, get(i, j));
    }
    return c;
}

F2Vec F2Matrix::apply(const F2Vec& v) const {
    if (v.size() != cols_n_) {
        throw PreconditionViolated("vector length does not match matrix columns");
    }
    F2Vec out(rows_n_);
    for (uint32_t i = 1; i <= rows_n_; i++) {
        out.set(i, rows_[i - 1].dot(v));
    }
    return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
    if (cols_n_ != other.rows_n_) {
        throw PreconditionViolated("matrix shape mismatch in product");
    }
    F2Matrix out(rows_n_, other.cols_n_);
    for (uint32_t j = 1; j <= other.cols_n_; j++) {
        F2Vec col = apply(other.column(j));
        for (uint32_t i = 1; i <= rows_n_; i++) {
            out.set(i, j, col.get(i));
        }
    }
    return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& other) const {
    if (rows_n_ != other.rows_n_ || cols_n_ != other.cols_n_) {
        throw PreconditionViolated("matrix shape mismatch in sum");
    }
    F2Matrix out = *this;
    for (uint32_t i = 0; i < rows_n_; i++) {
        out.rows_[i] += other.rows_[i];
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix out(cols_n_, rows_n_);
    for (uint32_t i = 1; i <= rows_n_; i++) {
        for (uint32_t j = 1; j <= cols_n_; j++) {
            out.set(j, i, get(i, j));
        }
    }
    return out;
}

uint32_t F2Matrix::rank() const {
    std::vector<F2Vec> rows = rows_;
    uint32_t r = 0;
    for (uint32_t c = 1; c <= cols_n_ && r < rows.size(); c++) {
        uint32_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (uint32_t k = 0; k < rows.size(); k++) {
            if (k != r && rows[k].get(c)) {
                rows[k] += rows[r];
            }
        }
        r++;
    }
    return r;
}

std::optional<F2Matrix> F2Matrix::inverse() const {
    if (rows_n_ != cols_n_) {
        throw PreconditionViolated("inverse of a non-square matrix");
    }
    uint32_t n = rows_n_;
    F2Matrix work = *this;
    F2Matrix inv = identity(n);
    for (uint32_t c = 1; c <= n; c++) {
        uint32_t pivot = c;
        while (pivot <= n && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot > n) {
            return std::nullopt;
        }
        if (pivot != c) {
            std::swap(work.rows_[pivot - 1], work.rows_[c - 1]);
            std::swap(inv.rows_[pivot - 1], inv.rows_[c - 1]);
        }
        for (uint32_t k = 1; k <= n; k++) {
            if (k != c && work.get(k, c)) {
                work.rows_[k - 1] += work.rows_[c - 1];
                inv.rows_[k - 1] += inv.rows_[c - 1];
            }
        }
    }
    return inv;
}

bool F2Matrix::is_zero() const {
    for (const auto& r : rows_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

bool F2Matrix::is_strictly_lower_triangular() const {
    if (rows_n_ != cols_n_) {
        return false;
    }
    for (uint32_t i = 1; i <= rows_n_; i++) {
        for (uint32_t j = i; j <= cols_n_; j++) {
            if (get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::string F2Matrix::to_string() const {
    std::string s;
    for (uint32_t i = 1; i <= rows_n_; i++) {
        s += rows_[i - 1].to_string();
        s.push_back('\n');
    }
    return s;
}

namespace {

// Row-reduced echelon form in place; returns (pivot column, row index) pairs.
std::vector<std::pair<uint32_t, uint32_t>> reduce_rows(std::vector<F2Vec>& rows, uint32_t cols) {
    std::vector<std::pair<uint32_t, uint32_t>> pivots;
    uint32_t r = 0;
    for (uint32_t c = 1; c <= cols && r < rows.size(); c++) {
        uint32_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (uint32_t k = 0; k < rows.size(); k++) {
            if (k != r && rows[k].get(c)) {
                rows[k] += rows[r];
            }
        }
        pivots.emplace_back(c, r);
        r++;
    }
    return pivots;
}

}  // namespace

std::vector<F2Vec> kernel_intersection(const std::vector<F2Matrix>& mats) {
    if (mats.empty()) {
        throw PreconditionViolated("kernel intersection of an empty family");
    }
    uint32_t n = mats.front().rows();
    for (const auto& m : mats) {
        if (m.rows() != m.cols() || m.rows() != n) {
            throw PreconditionViolated("matrices must be square of equal dimension");
        }
    }
    std::vector<F2Vec> rows;
    rows.reserve(mats.size() * n);
    for (const auto& m : mats) {
        for (uint32_t i = 1; i <= n; i++) {
            rows.push_back(m.row(i));
        }
    }
    auto pivots = reduce_rows(rows, n);
    std::vector<bool> is_pivot(n + 1, false);
    for (auto [c, _] : pivots) {
        is_pivot[c] = true;
    }
    std::vector<F2Vec> basis;
    for (uint32_t f = 1; f <= n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        F2Vec x(n);
        x.set(f, true);
        for (auto [c, ri] : pivots) {
            x.set(c, rows[ri].get(f));
        }
        basis.push_back(x);
    }
    return basis;
}

namespace {

// Returns an ordered basis v_1..v_d (in the current d-dimensional coordinates)
// with A v_j in span(v_{j+1}, ..., v_d) for every map in the family.
std::vector<F2Vec> triangular_basis(const std::vector<F2Matrix>& maps, uint32_t d) {
    if (d == 0) {
        return {};
    }
    auto ker = kernel_intersection(maps);
    if (ker.empty()) {
        throw InternalInvariantViolation("commuting square-zero family with trivial common kernel");
    }
    const F2Vec v = ker.back();
    const uint32_t p = v.alpha();

    // Complement basis: the standard vectors except index p. Quotient
    // coordinates of w are read off from w + w[p]*v.
    std::vector<uint32_t> keep;
    keep.reserve(d - 1);
    for (uint32_t i = 1; i <= d; i++) {
        if (i != p) {
            keep.push_back(i);
        }
    }

    auto quotient_coords = [&](const F2Vec& w) {
        F2Vec reduced = w;
        if (reduced.get(p)) {
            reduced += v;
        }
        F2Vec q(d - 1);
        for (uint32_t k = 0; k < keep.size(); k++) {
            q.set(k + 1, reduced.get(keep[k]));
        }
        return q;
    };

    std::vector<F2Matrix> quotient_maps;
    quotient_maps.reserve(maps.size());
    for (const auto& m : maps) {
        std::vector<F2Vec> cols;
        cols.reserve(d - 1);
        for (uint32_t k = 0; k < keep.size(); k++) {
            cols.push_back(quotient_coords(m.apply(F2Vec::unit(d, keep[k]))));
        }
        quotient_maps.push_back(F2Matrix::from_columns(d - 1, cols));
    }

    std::vector<F2Vec> sub;
    if (d > 1) {
        sub = triangular_basis(quotient_maps, d - 1);
    }

    std::vector<F2Vec> out;
    out.reserve(d);
    for (const auto& s : sub) {
        F2Vec lifted(d);
        for (uint32_t k = 0; k < keep.size(); k++) {
            if (s.get(k + 1)) {
                lifted += F2Vec::unit(d, keep[k]);
            }
        }
        out.push_back(lifted);
    }
    out.push_back(v);
    return out;
}

}  // namespace

F2Matrix simultaneous_strict_lower_triangularize(const std::vector<F2Matrix>& mats) {
    if (mats.empty()) {
        throw PreconditionViolated("empty family");
    }
    uint32_t n = mats.front().rows();
    for (const auto& m : mats) {
        if (m.rows() != m.cols() || m.rows() != n) {
            throw PreconditionViolated("matrices must be square of equal dimension");
        }
    }
    F2Matrix zero(n, n);
    for (size_t i = 0; i < mats.size(); i++) {
        if (!(mats[i] * mats[i] == zero)) {
            throw PreconditionViolated("matrix does not square to zero");
        }
        for (size_t j = i + 1; j < mats.size(); j++) {
            if (!(mats[i] * mats[j] == mats[j] * mats[i])) {
                throw PreconditionViolated("matrices do not commute");
            }
        }
    }

    auto basis = triangular_basis(mats, n);
    F2Matrix p = F2Matrix::from_columns(n, basis);
    auto m = p.inverse();
    if (!m.has_value()) {
        throw InternalInvariantViolation("assembled basis is not invertible");
    }
    for (const auto& a : mats) {
        if (!((*m * a * p).is_strictly_lower_triangular())) {
            throw InternalInvariantViolation("conjugate is not strictly lower triangular");
        }
    }
    return *m;
}

namespace {

void compose_pairs(std::vector<TwistedPair>& pairs, std::vector<F2Vec>* basis, uint32_t i,
                   uint32_t j) {
    const TwistedPair& pj = pairs[j - 1];
    TwistedPair& pi = pairs[i - 1];
    F2Vec new_b = pi.b + pj.b + pi.a.apply(pj.b);
    F2Matrix new_a = pi.a + pj.a + pi.a * pj.a;
    pi.a = std::move(new_a);
    pi.b = new_b;
    if (basis != nullptr) {
        (*basis)[i - 1] += (*basis)[j - 1];
    }
}

}  // namespace

void apply_transform_ops(std::span<const TransformOp> ops, std::vector<TwistedPair>& pairs) {
    for (const auto& op : ops) {
        if (op.kind == TransformOp::Kind::kSwap) {
            std::swap(pairs[op.i - 1], pairs[op.j - 1]);
        } else {
            compose_pairs(pairs, nullptr, op.i, op.j);
        }
    }
}

TwistedEliminationResult twisted_gaussian_elimination(std::vector<TwistedPair> pairs) {
    const uint32_t n = static_cast<uint32_t>(pairs.size());
    if (n == 0) {
        return TransformRecord{};
    }
    for (const auto& p : pairs) {
        if (p.a.rows() != n || p.a.cols() != n || p.b.size() != n) {
            throw PreconditionViolated("need exactly n pairs in dimension n");
        }
        if (!p.a.is_strictly_lower_triangular()) {
            throw PreconditionViolated("matrix is not strictly lower triangular");
        }
    }

    TransformRecord record;
    record.basis.reserve(n);
    for (uint32_t i = 1; i <= n; i++) {
        record.basis.push_back(F2Vec::unit(n, i));
    }

    auto first_zero = [&]() -> std::optional<uint32_t> {
        for (uint32_t i = 1; i <= n; i++) {
            if (pairs[i - 1].b.is_zero()) {
                return i;
            }
        }
        return std::nullopt;
    };
    if (auto z = first_zero()) {
        return ZeroVectorReached{*z};
    }

    // Phase 1: compose colliding pairs until the alpha values are pairwise
    // distinct. Each compose strictly raises sum(alpha), so this terminates.
    for (;;) {
        bool collided = false;
        for (uint32_t i = 1; i <= n && !collided; i++) {
            for (uint32_t j = i + 1; j <= n && !collided; j++) {
                if (pairs[i - 1].b.alpha() == pairs[j - 1].b.alpha()) {
                    compose_pairs(pairs, &record.basis, i, j);
                    record.ops.push_back({TransformOp::Kind::kCompose, i, j});
                    if (pairs[i - 1].b.is_zero()) {
                        return ZeroVectorReached{i};
                    }
                    collided = true;
                }
            }
        }
        if (!collided) {
            break;
        }
    }
    for (uint32_t pos = 1; pos <= n; pos++) {
        uint32_t k = pos;
        while (pairs[k - 1].b.alpha() != pos) {
            k++;
        }
        if (k != pos) {
            std::swap(pairs[pos - 1], pairs[k - 1]);
            std::swap(record.basis[pos - 1], record.basis[k - 1]);
            record.ops.push_back({TransformOp::Kind::kSwap, pos, k});
        }
    }

    // Phase 2: row reduction; composing slot i with slot alpha(b_i + e_i)
    // strictly raises that alpha while keeping alpha(b_i) = i.
    for (uint32_t i = 1; i <= n; i++) {
        const F2Vec ei = F2Vec::unit(n, i);
        while (!(pairs[i - 1].b == ei)) {
            uint32_t k = (pairs[i - 1].b + ei).alpha();
            compose_pairs(pairs, &record.basis, i, k);
            record.ops.push_back({TransformOp::Kind::kCompose, i, k});
        }
    }

    if (F2Matrix::from_rows(record.basis).rank() != n) {
        throw InternalInvariantViolation("elimination record basis is dependent");
    }
    return record;
}

}  // namespace permc3
