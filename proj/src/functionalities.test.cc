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

#include "qbsc/functionalities.h"

#include "gtest/gtest.h"
#include "qbsc/errors.h"

using namespace qbsc;

TEST(EprSource, first_request_wins) {
    EprSource source(1);
    ASSERT_THROW(source.alice(), ProtocolViolation);
    ASSERT_TRUE(source.request(Party::Alice, 4));
    ASSERT_FALSE(source.request(Party::Bob, 8));
    ASSERT_EQ(source.size(), 4u);
    ASSERT_EQ(source.audit().size(), 2u);
    ASSERT_TRUE(source.audit()[1].starts_with("ignored request n=8 from bob"));
    ASSERT_EQ(source.alice().side(), Side::A);
    ASSERT_EQ(source.bob().side(), Side::B);
}

TEST(EprSource, halves_share_pairs) {
    EprSource source = epr_distribute(64, 2);
    EprHalf a = source.alice();
    EprHalf b = source.bob();
    BasisString bases(64, Basis::X);
    ASSERT_EQ(a.measure_all(bases), b.measure_all(bases));
}

TEST(IdealCommitment, delivers_once) {
    IdealCommitment f;
    Bits m = Bits::from_string("1011");
    ASSERT_TRUE(f.commit(m).has_value());
    ASSERT_EQ(f.commit(Bits::from_string("0000")), std::nullopt);
    OpenDelivery d = f.open();
    ASSERT_EQ(d.kind, OpenDelivery::Kind::Delivered);
    ASSERT_EQ(d.message, m);
    ASSERT_EQ(f.open().kind, OpenDelivery::Kind::Ignored);
    ASSERT_EQ(f.state(), CommitmentState::Opened);
}

TEST(IdealCommitment, open_before_commit_halts) {
    IdealCommitment f;
    ASSERT_EQ(f.open().kind, OpenDelivery::Kind::Halted);
    ASSERT_EQ(f.state(), CommitmentState::Halted);
    ASSERT_EQ(f.commit(Bits::from_string("1")), std::nullopt);
}

TEST(IdealCommitment, receipt_carries_nothing) {
    IdealCommitment a, b;
    ASSERT_EQ(a.commit(Bits::from_string("0000"))->bytes(), b.commit(Bits::from_string("1111"))->bytes());
    ASSERT_TRUE(Receipt{}.bytes().empty());
}
