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

#include "qbsc/bits.h"

#include <algorithm>

#include "qbsc/errors.h"

namespace qbsc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidParameter("Rng::below: bound must be positive");
    }
    // Reject the short tail so every residue is equally likely.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Bits Bits::from_string(std::string_view text) {
    Bits out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw InvalidParameter("Bits::from_string: not a bit character");
        }
        out.bits_[i] = text[i] == '1' ? 1 : 0;
    }
    return out;
}

Bits Bits::random(std::size_t length, Rng &rng) {
    Bits out(length);
    for (auto &b : out.bits_) {
        b = rng.bit() ? 1 : 0;
    }
    return out;
}

Bits Bits::ones(std::size_t length) {
    Bits out(length);
    std::fill(out.bits_.begin(), out.bits_.end(), 1);
    return out;
}

Bits Bits::from_uint(std::uint64_t value, std::size_t length) {
    Bits out(length);
    for (std::size_t i = 0; i < length && i < 64; ++i) {
        out.bits_[length - 1 - i] = (value >> i) & 1;
    }
    return out;
}

std::size_t Bits::popcount() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Bits Bits::operator^(const Bits &other) const {
    if (other.size() != size()) {
        throw InvalidParameter("Bits xor: length mismatch (" + std::to_string(size()) + " vs " +
                               std::to_string(other.size()) + ")");
    }
    Bits out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return out;
}

Bits Bits::concat(const Bits &tail) const {
    Bits out = *this;
    out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
    return out;
}

Bits Bits::slice(std::size_t offset, std::size_t length) const {
    if (offset + length > size()) {
        throw InvalidParameter("Bits::slice: range out of bounds");
    }
    Bits out(length);
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(offset), length, out.bits_.begin());
    return out;
}

std::string Bits::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

Bytes Bits::pack() const {
    Bytes out((size() + 7) / 8, 0);
    for (std::size_t i = 0; i < size(); ++i) {
        if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return out;
}

Bits Bits::unpack(const Bytes &bytes, std::size_t length) {
    if (bytes.size() * 8 < length) {
        throw InvalidParameter("Bits::unpack: not enough bytes");
    }
    Bits out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.bits_[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    }
    return out;
}

std::string to_hex(const Bytes &bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xF]);
    }
    return s;
}

namespace {
int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw InvalidParameter("from_hex: odd number of digits");
    }
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw InvalidParameter("from_hex: invalid digit");
        }
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

}  // namespace qbsc
