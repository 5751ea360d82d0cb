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

#include <cstdint>
#include <string>
#include <vector>

#include "permc3/bits.hpp"

namespace permc3 {

/// Algebraic normal form of a Boolean function on `vars` inputs: the unique
/// multilinear polynomial over F_2 with the same truth table.
///
/// A monomial is keyed by the mask of its variables under the shared packing
/// (variable i at bit vars-i), so monomial masks and input indices live in the
/// same space. The coefficient table is the subset-XOR transform of the truth
/// table, which is its own inverse.
class AnfPolynomial {
   public:
    AnfPolynomial() = default;
    static AnfPolynomial zero(uint32_t vars);
    static AnfPolynomial one(uint32_t vars);
    static AnfPolynomial variable(uint32_t vars, uint32_t i);
    static AnfPolynomial monomial(uint32_t vars, uint32_t mask);
    static AnfPolynomial from_truth_table(uint32_t vars, const PackedBits& table);

    uint32_t vars() const { return vars_; }
    bool coeff(uint32_t monomial_mask) const { return coeffs_.get(monomial_mask); }
    bool is_zero() const { return !coeffs_.any(); }
    /// Largest monomial weight with a set coefficient; constants have degree 0.
    int degree() const;
    bool evaluate(uint32_t input_mask) const;
    PackedBits truth_table() const;
    /// Masks of set coefficients in ascending order.
    std::vector<uint32_t> monomials() const;

    AnfPolynomial operator+(const AnfPolynomial& other) const;
    bool operator==(const AnfPolynomial&) const = default;

    /// Renders like "a7 + a1a6 + a2a5 + a3a4 + a1a2a3": monomials sorted by
    /// degree, then by their variable sequence; "0" and "1" for constants.
    std::string to_string() const;

   private:
    uint32_t vars_ = 0;
    PackedBits coeffs_;
};

}  // namespace permc3
