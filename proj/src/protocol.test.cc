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

#include "qbsc/protocol.h"

#include "gtest/gtest.h"
#include "qbsc/errors.h"
#include "qbsc/stats.h"

using namespace qbsc;

namespace {

// Answers every query with the same string, so every basis string collides.
class ConstantOracle final : public Oracle {
   public:
    explicit ConstantOracle(std::size_t len) : value_(len) {}
    Bits query(const Bits &) override { return value_; }
    std::size_t range_len() const override { return value_.size(); }

   private:
    Bits value_;
};

std::ptrdiff_t first_index(const Transcript &t, std::string_view direction, std::string_view kind = "") {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].direction == direction && (kind.empty() || t[i].kind == kind)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

}  // namespace

TEST(Protocol, honest_sessions_recover_the_message) {
    for (std::size_t n = 1; n <= 16; ++n) {
        ProtocolParams params(n);
        Rng rng(n);
        for (std::uint64_t s = 0; s < 50; ++s) {
            Bits m = Bits::random(params.message_len(), rng);
            SessionResult r = run_honest_session(params, m, s * 31 + n);
            ASSERT_FALSE(r.failure.has_value()) << *r.failure;
            ASSERT_TRUE(r.result.accepted());
            ASSERT_EQ(*r.result.message, m) << "n=" << n;
        }
    }
}

TEST(Protocol, honest_transcript_shape) {
    // request, two deliveries, Alice's H1 and H2 queries, commit, receipt,
    // open, Bob's H2 and H1 queries, verdict.
    SessionResult r = run_honest_session(ProtocolParams(1), Bits::from_string("10"), 3);
    ASSERT_EQ(r.transcript.size(), 11u);
    std::vector<std::string> kinds;
    for (const Event &e : r.transcript.events()) kinds.push_back(e.direction + " " + e.kind);
    ASSERT_EQ(kinds, (std::vector<std::string>{"alice->epr epr-request", "epr->alice epr-deliver",
                                                "epr->bob epr-deliver", "alice->h1 query", "alice->h2 query",
                                                "alice->bob commit", "bob->env receipt", "alice->bob open",
                                                "bob->h2 query", "bob->h1 query", "bob->env verdict"}));
}

TEST(Protocol, receiver_makes_no_query_before_the_opening) {
    SessionResult r = run_honest_session(ProtocolParams(6), Bits(12), 8);
    auto open = first_index(r.transcript, "alice->bob", "open");
    ASSERT_GT(open, 0);
    ASSERT_GT(first_index(r.transcript, "bob->h1"), open);
    ASSERT_GT(first_index(r.transcript, "bob->h2"), open);
}

TEST(Protocol, commitment_recomputes_from_its_parts) {
    ProtocolParams params(5);
    EprRegister reg(5, 11);
    RandomOracle h1(params.h1_range(), 12), h2(params.h2_range(), 13);
    Committer alice(params, 14);
    Bits m = Bits::from_string("1100101011");
    Commitment c = alice.commit(m, EprHalf(reg, Side::A), h1, h2);

    Bits query = encode_bases(alice.bases()).concat(alice.outcomes());
    ASSERT_EQ(h1_query(alice.bases(), alice.outcomes()), query);
    ASSERT_EQ(c.c1, m ^ *h1.table().lookup(query));
    ASSERT_EQ(c.c2, *h2.table().lookup(encode_bases(alice.bases())));
    ASSERT_EQ(c.bytes(), c.c1.concat(c.c2).pack());
}

TEST(Protocol, c1_is_uniform_for_a_fixed_message) {
    ProtocolParams params(2);
    Bits m = Bits::from_string("1111");
    std::array<std::size_t, 16> counts{};
    for (std::uint64_t s = 0; s < 16000; ++s) {
        SessionResult r = run_honest_session(params, m, s);
        std::size_t v = 0;
        for (std::size_t i = 0; i < 4; ++i) v = 2 * v + r.commitment.c1[i];
        ++counts[v];
    }
    std::array<double, 16> probs;
    probs.fill(1.0 / 16);
    ASSERT_GT(chi_square_goodness_of_fit(counts, probs).p_value, 0.01);
}

TEST(Protocol, receiver_rejects_a_wrong_opening_without_measuring) {
    ProtocolParams params(8);
    EprRegister reg(8, 1);
    RandomOracle h1(params.h1_range(), 2), h2(params.h2_range(), 3);
    Committer alice(params, 4);
    Receiver bob(params);
    ASSERT_TRUE(bob.receive_commit(alice.commit(Bits(16), EprHalf(reg, Side::A), h1, h2)));

    BasisString wrong = alice.open();
    wrong[0] = wrong[0] == Basis::Z ? Basis::X : Basis::Z;
    if (h2.query(encode_bases(wrong)) == bob.stored()->c2) GTEST_SKIP() << "seed gives an H2 collision";
    ASSERT_FALSE(bob.open(wrong, EprHalf(reg, Side::B), h1, h2).accepted());
    for (std::size_t i = 0; i < 8; ++i) ASSERT_FALSE(reg.is_measured(Side::B, i));
}

TEST(Protocol, malformed_or_out_of_order_input_rejects) {
    ProtocolParams params(3);
    EprRegister reg(3, 1);
    RandomOracle h1(6, 2), h2(3, 3);
    Receiver early(params);
    ASSERT_FALSE(early.open(BasisString(3), EprHalf(reg, Side::B), h1, h2).accepted());

    Receiver bob(params);
    ASSERT_FALSE(bob.receive_commit({Bits(5), Bits(3)}));
    ASSERT_EQ(bob.phase(), ReceiverPhase::Rejected);

    Committer alice(params, 4);
    ASSERT_THROW(alice.open(), ProtocolViolation);
    ASSERT_THROW(alice.commit(Bits(5), EprHalf(reg, Side::A), h1, h2), InvalidParameter);
    alice.commit(Bits(6), EprHalf(reg, Side::A), h1, h2);
    ASSERT_THROW(alice.commit(Bits(6), EprHalf(reg, Side::A), h1, h2), ProtocolViolation);
    ASSERT_THROW(ProtocolParams(0), InvalidParameter);
}

TEST(Protocol, binding_rests_on_h2_collision_resistance) {
    // With a constant H2 every basis string passes the check.
    ProtocolParams params(4);
    EprRegister reg(4, 1);
    RandomOracle h1(8, 2);
    ConstantOracle h2(4);
    Committer alice(params, 3);
    Receiver bob(params);
    bob.receive_commit(alice.commit(Bits(8), EprHalf(reg, Side::A), h1, h2));
    BasisString other = alice.open();
    other[1] = other[1] == Basis::Z ? Basis::X : Basis::Z;
    ASSERT_TRUE(bob.open(other, EprHalf(reg, Side::B), h1, h2).accepted());
}

TEST(Protocol, pad_message) {
    ASSERT_EQ(pad_message(Bits::from_string("11"), ProtocolParams(2)).to_string(), "0011");
}
