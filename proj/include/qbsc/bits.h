// Copyright 2026 The qbsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBSC_BITS_H
#define QBSC_BITS_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbsc/rng.h"

namespace qbsc {

using Bytes = std::vector<std::uint8_t>;

/// A classical bit string. Bit 0 is the leftmost bit of to_string() and the
/// most significant bit of the first byte of pack().
class Bits {
   public:
    Bits() = default;
    explicit Bits(std::size_t length) : bits_(length, 0) {}

    /// Parses a string of '0'/'1' characters.
    static Bits from_string(std::string_view text);
    static Bits random(std::size_t length, Rng &rng);
    static Bits ones(std::size_t length);
    /// Big-endian binary expansion of value in exactly `length` bits.
    static Bits from_uint(std::uint64_t value, std::size_t length);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }
    std::size_t popcount() const;

    /// Bitwise XOR; lengths must match.
    Bits operator^(const Bits &other) const;
    Bits concat(const Bits &tail) const;
    Bits slice(std::size_t offset, std::size_t length) const;

    std::string to_string() const;
    /// MSB-first packing, zero-padded to a whole byte.
    Bytes pack() const;
    /// Inverse of pack() for a known bit length.
    static Bits unpack(const Bytes &bytes, std::size_t length);

    auto operator<=>(const Bits &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

std::string to_hex(const Bytes &bytes);
/// Throws InvalidParameter on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace qbsc

#endif  // QBSC_BITS_H
