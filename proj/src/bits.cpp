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

#include "permc3/bits.hpp"

#include <bit>

namespace permc3 {

uint64_t PackedBits::count() const {
    uint64_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

void PackedBits::flip_all() {
    if (n_ == 0) {
        return;
    }
    for (auto& w : words_) {
        w = ~w;
    }
    // Keep the bits beyond the length zero.
    const uint64_t tail = n_ & 63;
    if (tail != 0) {
        words_.back() &= (uint64_t{1} << tail) - 1;
    }
}

PackedBits& PackedBits::operator^=(const PackedBits& other) {
    if (n_ != other.n_) {
        throw PreconditionViolated("mixed bit-table lengths");
    }
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

namespace {

// Positions whose bit b is clear, within a 64-bit word.
constexpr uint64_t kStrideMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

void subset_xor_transform(PackedBits& table, uint32_t vars) {
    if (table.size() != (uint64_t{1} << vars)) {
        throw PreconditionViolated("table length must be 2^vars");
    }
    auto& words = table.words();
    for (uint32_t b = 0; b < vars; b++) {
        if (b < 6) {
            uint32_t stride = 1u << b;
            for (auto& w : words) {
                w ^= (w & kStrideMask[b]) << stride;
            }
        } else {
            size_t word_stride = size_t{1} << (b - 6);
            for (size_t base = 0; base < words.size(); base += 2 * word_stride) {
                for (size_t k = 0; k < word_stride; k++) {
                    words[base + word_stride + k] ^= words[base + k];
                }
            }
        }
    }
}

}  // namespace permc3
