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

#include "permc3/anf.hpp"

#include <algorithm>
#include <bit>

namespace permc3 {

AnfPolynomial AnfPolynomial::zero(uint32_t vars) {
    AnfPolynomial p;
    p.vars_ = vars;
    p.coeffs_ = PackedBits(uint64_t{1} << vars);
    return p;
}

AnfPolynomial AnfPolynomial::one(uint32_t vars) {
    return monomial(vars, 0);
}

AnfPolynomial AnfPolynomial::variable(uint32_t vars, uint32_t i) {
    if (i < 1 || i > vars) {
        throw PreconditionViolated("variable index out of range");
    }
    return monomial(vars, 1u << (vars - i));
}

AnfPolynomial AnfPolynomial::monomial(uint32_t vars, uint32_t mask) {
    AnfPolynomial p = zero(vars);
    p.coeffs_.set(mask, true);
    return p;
}

AnfPolynomial AnfPolynomial::from_truth_table(uint32_t vars, const PackedBits& table) {
    AnfPolynomial p;
    p.vars_ = vars;
    p.coeffs_ = table;
    subset_xor_transform(p.coeffs_, vars);
    return p;
}

int AnfPolynomial::degree() const {
    int deg = 0;
    uint64_t entries = uint64_t{1} << vars_;
    for (uint64_t m = 0; m < entries; m++) {
        if (coeffs_.get(m)) {
            deg = std::max(deg, std::popcount(m));
        }
    }
    return deg;
}

bool AnfPolynomial::evaluate(uint32_t input_mask) const {
    // XOR of coefficients over all submasks of the input.
    bool acc = coeffs_.get(0);
    for (uint32_t sub = input_mask; sub != 0; sub = (sub - 1) & input_mask) {
        acc ^= coeffs_.get(sub);
    }
    return acc;
}

PackedBits AnfPolynomial::truth_table() const {
    PackedBits table = coeffs_;
    subset_xor_transform(table, vars_);
    return table;
}

std::vector<uint32_t> AnfPolynomial::monomials() const {
    std::vector<uint32_t> out;
    uint64_t entries = uint64_t{1} << vars_;
    for (uint64_t m = 0; m < entries; m++) {
        if (coeffs_.get(m)) {
            out.push_back(static_cast<uint32_t>(m));
        }
    }
    return out;
}

AnfPolynomial AnfPolynomial::operator+(const AnfPolynomial& other) const {
    if (vars_ != other.vars_) {
        throw PreconditionViolated("mixed arities in polynomial sum");
    }
    AnfPolynomial out = *this;
    out.coeffs_ ^= other.coeffs_;
    return out;
}

std::string AnfPolynomial::to_string() const {
    auto masks = monomials();
    if (masks.empty()) {
        return "0";
    }
    auto variables_of = [&](uint32_t mask) {
        std::vector<uint32_t> vs;
        for (uint32_t i = 1; i <= vars_; i++) {
            if ((mask >> (vars_ - i)) & 1u) {
                vs.push_back(i);
            }
        }
        return vs;
    };
    std::vector<std::vector<uint32_t>> terms;
    terms.reserve(masks.size());
    for (uint32_t m : masks) {
        terms.push_back(variables_of(m));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    std::string s;
    for (size_t k = 0; k < terms.size(); k++) {
        if (k > 0) {
            s += " + ";
        }
        if (terms[k].empty()) {
            s += "1";
            continue;
        }
        for (uint32_t v : terms[k]) {
            s += "a" + std::to_string(v);
        }
    }
    return s;
}

}  // namespace permc3
