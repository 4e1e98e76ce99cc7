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

#include <set>

#include "gtest/gtest.h"
#include "qbsc/errors.h"
#include "qbsc/rng.h"

using namespace qbsc;

TEST(Bits, string_round_trip) {
    Bits b = Bits::from_string("0110100111");
    ASSERT_EQ(b.size(), 10u);
    ASSERT_EQ(b.to_string(), "0110100111");
    ASSERT_EQ(b.popcount(), 6u);
    ASSERT_THROW(Bits::from_string("01a"), InvalidParameter);
}

TEST(Bits, from_uint_is_big_endian) {
    ASSERT_EQ(Bits::from_uint(5, 4).to_string(), "0101");
    ASSERT_EQ(Bits::from_uint(0, 3).to_string(), "000");
}

TEST(Bits, xor_concat_slice) {
    Bits a = Bits::from_string("1100");
    Bits b = Bits::from_string("1010");
    ASSERT_EQ((a ^ b).to_string(), "0110");
    ASSERT_EQ(a.concat(b).to_string(), "11001010");
    ASSERT_EQ(a.concat(b).slice(2, 4).to_string(), "0010");
    ASSERT_THROW(a ^ Bits::from_string("1"), InvalidParameter);
}

TEST(Bits, pack_is_msb_first_and_round_trips) {
    Bits b = Bits::from_string("1000000011");
    Bytes packed = b.pack();
    ASSERT_EQ(packed, (Bytes{0x80, 0xC0}));
    ASSERT_EQ(Bits::unpack(packed, 10), b);
}

TEST(Bits, hex) {
    ASSERT_EQ(to_hex(Bytes{0x00, 0xab, 0x7f}), "00ab7f");
    ASSERT_EQ(from_hex("00AB7f"), (Bytes{0x00, 0xab, 0x7f}));
    ASSERT_EQ(to_hex({}), "");
    ASSERT_THROW(from_hex("abc"), InvalidParameter);
    ASSERT_THROW(from_hex("zz"), InvalidParameter);
}

TEST(Rng, streams_are_deterministic_and_distinct) {
    ASSERT_EQ(derive_seed(7, Stream::H1), derive_seed(7, Stream::H1));
    std::set<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 10; ++s) seeds.insert(derive_seed(7, s));
    ASSERT_EQ(seeds.size(), 10u);

    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
}

TEST(Rng, below_stays_in_range_and_covers_it) {
    Rng rng(1);
    std::array<int, 6> counts{};
    for (int i = 0; i < 6000; ++i) {
        auto v = rng.below(6);
        ASSERT_LT(v, 6u);
        ++counts[v];
    }
    for (int c : counts) {
        ASSERT_GT(c, 850);
        ASSERT_LT(c, 1150);
    }
}
