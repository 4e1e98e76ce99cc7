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

#include "qbsc/simproof.h"

#include "gtest/gtest.h"
#include "oracles.h"
#include "qbsc/attacks.h"
#include "qbsc/errors.h"
#include "qbsc/stats.h"

using namespace qbsc;

namespace {

// Fixed message; after the opening it verifies like an honest receiver.
class FixedMessageReceiver final : public ReceiverEnvironment {
   public:
    explicit FixedMessageReceiver(Bits m) : message_(std::move(m)) {}
    Bits choose_message(const ProtocolParams &, Rng &) override { return message_; }
    void on_commit(ReceiverPorts &, const Commitment &c) override { c_ = c; }
    void on_open(ReceiverPorts &ports, const BasisString &bases) override {
        if (ports.h2.query(h2_query(bases)) != c_.c2) return;
        decoded_ = c_.c1 ^ ports.h1.query(h1_query(bases, ports.qubits.measure_all(bases)));
    }
    bool decide() override { return decoded_ == message_; }

   private:
    Bits message_;
    Commitment c_;
    std::optional<Bits> decoded_;
};

// Queries H1 at every possible b|O before the opening (n = 1 only).
class ExhaustiveH1Receiver final : public ReceiverEnvironment {
   public:
    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        return Bits::random(params.message_len(), rng);
    }
    void on_commit(ReceiverPorts &ports, const Commitment &) override {
        for (std::uint64_t v = 0; v < 4; ++v) ports.h1.query(Bits::from_uint(v, 2));
    }
    void on_open(ReceiverPorts &, const BasisString &) override {}
    bool decide() override { return false; }
};

class RecordingSender final : public SenderEnvironment {
   public:
    explicit RecordingSender(Bits *committed) : committed_(committed) {}
    Commitment commit(SenderPorts &ports) override {
        *committed_ = Bits::random(ports.params.message_len(), ports.rng);
        committer_.emplace(ports.params, ports.rng.next());
        return committer_->commit(*committed_, ports.qubits, ports.h1, ports.h2);
    }
    BasisString open(SenderPorts &) override { return committer_->open(); }
    bool decide(const OpenResult &out) override { return out.accepted(); }

   private:
    Bits *committed_;
    std::optional<Committer> committer_;
};

// Commits to a random c2 it never queried.
class BlindSender final : public SenderEnvironment {
   public:
    Commitment commit(SenderPorts &ports) override {
        return {Bits::random(ports.params.h1_range(), ports.rng), Bits::random(ports.params.h2_range(), ports.rng)};
    }
    BasisString open(SenderPorts &ports) override { return random_bases(ports.params.n(), ports.rng); }
    bool decide(const OpenResult &out) override { return out.accepted(); }
};

}  // namespace

TEST(SigmaB, view_does_not_depend_on_the_message) {
    ProtocolParams params(6);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        FixedMessageReceiver zeros(Bits(12)), ones(Bits::ones(12));
        ReceiverRun a = sigma_b_run(params, zeros, seed);
        ReceiverRun b = sigma_b_run(params, ones, seed);
        ASSERT_EQ(a.transcript, b.transcript);
        ASSERT_TRUE(a.decision);
        ASSERT_TRUE(b.decision);
        ASSERT_EQ(a.programmed_points, 1u);
        ASSERT_FALSE(a.premature_program_point);
    }
}

TEST(SigmaB, real_view_has_the_same_shape) {
    ProtocolParams params(4);
    FixedMessageReceiver env_real(Bits(8)), env_ideal(Bits(8));
    ReceiverRun real = run_receiver_real(params, env_real, 1);
    ReceiverRun ideal = sigma_b_run(params, env_ideal, 1);
    ASSERT_EQ(real.transcript.size(), ideal.transcript.size());
    for (std::size_t i = 0; i < real.transcript.size(); ++i) {
        ASSERT_EQ(real.transcript[i].direction, ideal.transcript[i].direction);
        ASSERT_EQ(real.transcript[i].kind, ideal.transcript[i].kind);
        ASSERT_EQ(real.transcript[i].payload.size(), ideal.transcript[i].payload.size());
    }
}

TEST(SigmaB, early_query_at_the_program_point_is_flagged) {
    ProtocolParams params(1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ExhaustiveH1Receiver env;
        ASSERT_TRUE(sigma_b_run(params, env, seed).premature_program_point);
    }
}

TEST(SigmaA, extracts_honest_commitments) {
    ProtocolParams params(8);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Bits committed;
        RecordingSender env(&committed);
        SenderRun run = sigma_a_ideal(params, env, seed);
        ASSERT_FALSE(run.extraction_miss);
        ASSERT_EQ(run.extracted_message, committed);
        ASSERT_TRUE(run.opened);
        ASSERT_EQ(run.receiver_output, OpenResult::accept(committed));
    }
}

TEST(SigmaA, unqueried_commitment_is_an_extraction_miss) {
    ProtocolParams params(8);
    std::size_t misses = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        BlindSender env;
        SenderRun run = sigma_a_ideal(params, env, seed);
        misses += run.extraction_miss;
        ASSERT_FALSE(run.receiver_output.accepted());
    }
    ASSERT_EQ(misses, 200u);
}

TEST(SigmaA, diverges_exactly_on_free_h2_collisions) {
    // 16 distinct queries into 8-bit H2 responses.
    ProtocolParams params(8);
    const std::size_t trials = 4000;
    std::size_t diverged = 0;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        BindingComparison cmp = sigma_a_run(params, collision_sender(16), seed);
        if (cmp.diverged()) {
            ++diverged;
            ASSERT_TRUE(cmp.real.receiver_output.accepted());
            ASSERT_FALSE(cmp.ideal.receiver_output.accepted());
        }
    }
    double expected = qbsc_test::birthday_collision(16, 8);
    ASSERT_NEAR(static_cast<double>(diverged) / trials, expected, 4 * binomial_sigma(expected, trials));
}

TEST(Harness, estimate_advantage_refuses_small_samples) {
    WorldTrial yes = [](std::uint64_t) { return true; };
    ASSERT_THROW(estimate_advantage(yes, yes, 99, 1), InvalidParameter);
    AdvantageEstimate e = estimate_advantage(yes, yes, 100, 1);
    ASSERT_EQ(e.advantage, 0.0);
    ASSERT_TRUE(e.within_noise());
}

TEST(Harness, separates_worlds_that_differ) {
    WorldTrial real = [](std::uint64_t s) { return s % 4 != 0; };
    WorldTrial ideal = [](std::uint64_t s) { return s % 4 == 0; };
    AdvantageEstimate e = estimate_advantage(real, ideal, 2000, 3);
    ASSERT_GT(e.advantage, 0.4);
    ASSERT_FALSE(e.within_noise());
}

TEST(Harness, shipped_environments) {
    ProtocolParams params(4);
    auto envs = shipped_distinguishers(params);
    ASSERT_EQ(envs.size(), 7u);
    for (const Distinguisher &d : envs) {
        AdvantageEstimate e = estimate_advantage(d.real, d.ideal, 400, 17);
        if (d.name == "message-check" || d.name == "honest-receiver" || d.name == "honest-sender") {
            ASSERT_EQ(e.p_real, 1.0) << d.name;
            ASSERT_EQ(e.p_ideal, 1.0) << d.name;
        }
        if (d.name == "wrong-opening") {
            ASSERT_EQ(e.p_real, 1.0);
            ASSERT_EQ(e.p_ideal, 1.0);
        }
    }
}

TEST(HonestWorld, both_worlds_deliver_the_message) {
    class Check final : public HonestEnvironment {
       public:
        Bits choose_message(const ProtocolParams &p, Rng &rng) override { return Bits::random(p.message_len(), rng); }
        bool decide(const Bits &m, const OpenResult &out) override { return out.accepted() && *out.message == m; }
    };
    ProtocolParams params(3);
    for (std::uint64_t s = 0; s < 50; ++s) {
        Check a, b;
        ASSERT_TRUE(run_honest_world(World::Real, params, a, s));
        ASSERT_TRUE(run_honest_world(World::Ideal, params, b, s));
    }
}
