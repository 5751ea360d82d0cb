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
#include <vector>

#include "permc3/errors.hpp"

namespace permc3 {

/// A fixed-length packed bit sequence; bits beyond the length stay zero.
class PackedBits {
   public:
    PackedBits() = default;
    explicit PackedBits(uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

    uint64_t size() const { return n_; }
    bool get(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i, bool value) {
        uint64_t bit = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= bit;
        } else {
            words_[i >> 6] &= ~bit;
        }
    }
    void flip(uint64_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    /// Complements every bit within the length.
    void flip_all();

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    uint64_t count() const;

    PackedBits& operator^=(const PackedBits& other);
    bool operator==(const PackedBits&) const = default;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

   private:
    uint64_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// In-place subset-XOR (zeta) transform of a table over 2^vars entries,
/// entry index packed as usual. Over F_2 this transform is an involution and
/// maps a truth table to its polynomial coefficients and back.
void subset_xor_transform(PackedBits& table, uint32_t vars);

}  // namespace permc3
