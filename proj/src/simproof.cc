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

#include "qbsc/errors.h"
#include "qbsc/functionalities.h"
#include "qbsc/stats.h"

namespace qbsc {

std::string_view world_name(World world) { return world == World::Real ? "real" : "ideal"; }

bool run_honest_world(World world, const ProtocolParams &params, HonestEnvironment &env, std::uint64_t seed) {
    Rng env_rng(derive_seed(seed, Stream::Environment));
    Bits message = env.choose_message(params, env_rng);
    if (world == World::Real) {
        SessionResult session = run_honest_session(params, message, seed);
        return env.decide(message, session.result);
    }
    IdealCommitment fcom;
    fcom.commit(message);
    OpenDelivery delivery = fcom.open();
    OpenResult out = delivery.kind == OpenDelivery::Kind::Delivered ? OpenResult::accept(delivery.message)
                                                                     : OpenResult::reject();
    return env.decide(message, out);
}

namespace {

// Oracle views handed to a corrupted party: queries are recorded, then the
// budget is enforced in front of the recorder so refused queries leave no
// trace.
struct PartyOracles {
    PartyOracles(Oracle &h1, Oracle &h2, Transcript &t, const std::string &who, QueryBudget budget)
        : rec_h1(h1, t, who + "->h1"),
          rec_h2(h2, t, who + "->h2"),
          h1(rec_h1, budget.h1, "H1"),
          h2(rec_h2, budget.h2, "H2") {}

    RecordingOracle rec_h1;
    RecordingOracle rec_h2;
    BudgetedOracle h1;
    BudgetedOracle h2;
};

}  // namespace

ReceiverRun run_receiver_real(const ProtocolParams &params, ReceiverEnvironment &env, std::uint64_t seed,
                              QueryBudget budget) {
    ReceiverRun run;
    Transcript &t = run.transcript;
    Rng env_rng(derive_seed(seed, Stream::Environment));
    run.message = env.choose_message(params, env_rng);

    EprSource source(derive_seed(seed, Stream::Epr));
    source.request(Party::Alice, params.n());
    RandomOracle h1(params.h1_range(), derive_seed(seed, Stream::H1));
    RandomOracle h2(params.h2_range(), derive_seed(seed, Stream::H2));

    t.record("epr->bob", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    PartyOracles views(h1, h2, t, "bob", budget);
    ReceiverPorts ports{params, source.bob(), views.h1, views.h2, env_rng};
    env.on_setup(ports);

    Committer alice(params, derive_seed(seed, Stream::Alice));
    Commitment c = alice.commit(run.message, source.alice(), h1, h2);
    t.record("alice->bob", Channel::Classical, "commit", c.bytes());
    env.on_commit(ports, c);

    BasisString bases = alice.open();
    t.record("alice->bob", Channel::Classical, "open", encode_bases(bases).pack());
    env.on_open(ports, bases);

    run.decision = env.decide();
    return run;
}

ReceiverRun sigma_b_run(const ProtocolParams &params, ReceiverEnvironment &env, std::uint64_t seed,
                        QueryBudget budget) {
    ReceiverRun run;
    Transcript &t = run.transcript;
    Rng env_rng(derive_seed(seed, Stream::Environment));
    run.message = env.choose_message(params, env_rng);

    IdealCommitment fcom;

    // sigma_B's simulated resources. It holds side A of the pairs.
    Rng sim_rng(derive_seed(seed, Stream::Simulator));
    EprSource source(derive_seed(seed, Stream::Epr));
    source.request(Party::Alice, params.n());
    RandomOracle h1(params.h1_range(), derive_seed(seed, Stream::H1));
    RandomOracle h2(params.h2_range(), derive_seed(seed, Stream::H2));

    t.record("epr->bob", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    PartyOracles views(h1, h2, t, "bob", budget);
    ReceiverPorts ports{params, source.bob(), views.h1, views.h2, env_rng};
    env.on_setup(ports);

    // The receipt is all sigma_B learns in the commitment phase.
    fcom.commit(run.message);
    Bits c1 = Bits::random(params.h1_range(), sim_rng);
    BasisString bases = random_bases(params.n(), sim_rng);
    OutcomeString outcomes = source.alice().measure_all(bases);
    Commitment c{c1, h2.query(h2_query(bases))};
    t.record("alice->bob", Channel::Classical, "commit", c.bytes());
    env.on_commit(ports, c);

    OpenDelivery delivery = fcom.open();
    if (h1.table().program(h1_query(bases, outcomes), delivery.message ^ c1) == ProgramResult::AlreadyDefined) {
        run.premature_program_point = true;
    }
    run.programmed_points = h1.table().programmed_count();
    t.record("alice->bob", Channel::Classical, "open", encode_bases(bases).pack());
    env.on_open(ports, bases);

    run.decision = env.decide();
    return run;
}

SenderRun run_sender_real(const ProtocolParams &params, SenderEnvironment &env, std::uint64_t seed,
                          QueryBudget budget) {
    SenderRun run;
    Transcript &t = run.transcript;
    Rng env_rng(derive_seed(seed, Stream::Environment));

    EprSource source(derive_seed(seed, Stream::Epr));
    source.request(Party::Alice, params.n());
    RandomOracle h1(params.h1_range(), derive_seed(seed, Stream::H1));
    RandomOracle h2(params.h2_range(), derive_seed(seed, Stream::H2));

    t.record("epr->alice", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    PartyOracles views(h1, h2, t, "alice", budget);
    SenderPorts ports{params, source.alice(), views.h1, views.h2, env_rng};
    env.on_setup(ports);

    Receiver bob(params);
    Commitment c = env.commit(ports);
    t.record("alice->bob", Channel::Classical, "commit", c.bytes());
    bob.receive_commit(c);
    t.record("bob->env", Channel::Classical, "receipt", Receipt{}.bytes());

    BasisString bases = env.open(ports);
    t.record("alice->bob", Channel::Classical, "open", encode_bases(bases).pack());
    RecordingOracle bob_h1(h1, t, "bob->h1");
    RecordingOracle bob_h2(h2, t, "bob->h2");
    run.receiver_output = bob.open(bases, source.bob(), bob_h1, bob_h2);
    t.record("bob->env", Channel::Classical, "verdict", Bytes{static_cast<std::uint8_t>(run.receiver_output.accepted())});

    run.decision = env.decide(run.receiver_output);
    return run;
}

SenderRun sigma_a_ideal(const ProtocolParams &params, SenderEnvironment &env, std::uint64_t seed,
                        QueryBudget budget) {
    SenderRun run;
    Transcript &t = run.transcript;
    Rng env_rng(derive_seed(seed, Stream::Environment));

    IdealCommitment fcom;

    // sigma_A's simulated resources. It holds side B and sees every query
    // through the oracle tables.
    EprSource source(derive_seed(seed, Stream::Epr));
    source.request(Party::Alice, params.n());
    RandomOracle h1(params.h1_range(), derive_seed(seed, Stream::H1));
    RandomOracle h2(params.h2_range(), derive_seed(seed, Stream::H2));

    t.record("epr->alice", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    PartyOracles views(h1, h2, t, "alice", budget);
    SenderPorts ports{params, source.alice(), views.h1, views.h2, env_rng};
    env.on_setup(ports);

    Commitment c = env.commit(ports);
    t.record("alice->bob", Channel::Classical, "commit", c.bytes());

    std::vector<Bits> preimages;
    if (c.c1.size() == params.h1_range() && c.c2.size() == params.h2_range()) {
        for (const OracleEntry &e : h2.table().entries()) {
            if (e.query.size() == params.n() && e.response == c.c2) preimages.push_back(e.query);
        }
    }
    if (preimages.empty()) {
        run.extraction_miss = true;
        run.extracted_message = Bits(params.message_len());
    } else {
        run.ambiguous_extraction = preimages.size() > 1;
        run.extracted_bases = decode_bases(preimages.front());
        OutcomeString outcomes = source.bob().measure_all(*run.extracted_bases);
        run.extracted_message = c.c1 ^ h1.query(h1_query(*run.extracted_bases, outcomes));
    }
    fcom.commit(run.extracted_message);
    t.record("bob->env", Channel::Classical, "receipt", Receipt{}.bytes());

    BasisString bases = env.open(ports);
    t.record("alice->bob", Channel::Classical, "open", encode_bases(bases).pack());
    if (run.extracted_bases && bases == *run.extracted_bases) {
        OpenDelivery delivery = fcom.open();
        run.opened = true;
        run.receiver_output = OpenResult::accept(delivery.message);
    } else {
        run.receiver_output = OpenResult::reject();
    }
    t.record("bob->env", Channel::Classical, "verdict", Bytes{static_cast<std::uint8_t>(run.receiver_output.accepted())});

    run.decision = env.decide(run.receiver_output);
    return run;
}

BindingComparison sigma_a_run(const ProtocolParams &params, const SenderEnvironmentFactory &make_env,
                              std::uint64_t seed, QueryBudget budget) {
    BindingComparison out;
    {
        auto env = make_env();
        out.real = run_sender_real(params, *env, seed, budget);
    }
    {
        auto env = make_env();
        out.ideal = sigma_a_ideal(params, *env, seed, budget);
    }
    return out;
}

AdvantageEstimate estimate_advantage(const WorldTrial &real, const WorldTrial &ideal, std::size_t trials,
                                     std::uint64_t seed) {
    if (trials < 100) {
        throw InvalidParameter("estimate_advantage: at least 100 trials required, got " + std::to_string(trials));
    }
    std::size_t hits_real = 0, hits_ideal = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::uint64_t s = derive_seed(seed, i);
        if (real(s)) ++hits_real;
        if (ideal(s)) ++hits_ideal;
    }
    AdvantageEstimate est;
    est.trials = trials;
    est.p_real = static_cast<double>(hits_real) / static_cast<double>(trials);
    est.p_ideal = static_cast<double>(hits_ideal) / static_cast<double>(trials);
    est.advantage = std::abs(est.p_real - est.p_ideal);
    est.halfwidth = advantage_halfwidth((est.p_real + est.p_ideal) / 2.0, trials);
    return est;
}

WorldTrial honest_trial(World world, const ProtocolParams &params, HonestEnvironmentFactory make_env) {
    return [=](std::uint64_t seed) {
        auto env = make_env();
        return run_honest_world(world, params, *env, seed);
    };
}

WorldTrial receiver_trial(World world, const ProtocolParams &params, ReceiverEnvironmentFactory make_env,
                          QueryBudget budget) {
    return [=](std::uint64_t seed) {
        auto env = make_env();
        return world == World::Real ? run_receiver_real(params, *env, seed, budget).decision
                                    : sigma_b_run(params, *env, seed, budget).decision;
    };
}

WorldTrial sender_trial(World world, const ProtocolParams &params, SenderEnvironmentFactory make_env,
                        QueryBudget budget) {
    return [=](std::uint64_t seed) {
        auto env = make_env();
        return world == World::Real ? run_sender_real(params, *env, seed, budget).decision
                                    : sigma_a_ideal(params, *env, seed, budget).decision;
    };
}

namespace {

bool parity(const Bits &bits) { return bits.popcount() % 2 == 1; }

class MessageCheck final : public HonestEnvironment {
   public:
    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        return Bits::random(params.message_len(), rng);
    }
    bool decide(const Bits &message, const OpenResult &out) override {
        return out.accepted() && *out.message == message;
    }
};

class HonestReceiver final : public ReceiverEnvironment {
   public:
    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        message_ = Bits::random(params.message_len(), rng);
        return message_;
    }
    void on_commit(ReceiverPorts &, const Commitment &c) override { commitment_ = c; }
    void on_open(ReceiverPorts &ports, const BasisString &bases) override {
        if (ports.h2.query(h2_query(bases)) != commitment_.c2) return;
        OutcomeString outcomes = ports.qubits.measure_all(bases);
        decoded_ = commitment_.c1 ^ ports.h1.query(h1_query(bases, outcomes));
    }
    bool decide() override { return decoded_ == message_; }

   private:
    Bits message_;
    Commitment commitment_;
    std::optional<Bits> decoded_;
};

class MessageGuess final : public ReceiverEnvironment {
   public:
    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        ones_ = rng.bit();
        return ones_ ? Bits::ones(params.message_len()) : Bits(params.message_len());
    }
    void on_commit(ReceiverPorts &, const Commitment &c) override { guess_ones_ = 2 * c.c1.popcount() > c.c1.size(); }
    void on_open(ReceiverPorts &, const BasisString &) override {}
    bool decide() override { return guess_ones_ == ones_; }

   private:
    bool ones_ = false;
    bool guess_ones_ = false;
};

class ViewParity final : public ReceiverEnvironment {
   public:
    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        return Bits::random(params.message_len(), rng);
    }
    void on_commit(ReceiverPorts &, const Commitment &c) override { bit_ = parity(c.c1) ^ parity(c.c2); }
    void on_open(ReceiverPorts &ports, const BasisString &bases) override {
        bit_ ^= parity(encode_bases(bases)) ^ parity(ports.qubits.measure_all(bases));
    }
    bool decide() override { return bit_; }

   private:
    bool bit_ = false;
};

class HonestSender final : public SenderEnvironment {
   public:
    Commitment commit(SenderPorts &ports) override {
        message_ = Bits::random(ports.params.message_len(), ports.rng);
        committer_.emplace(ports.params, ports.rng.next());
        return committer_->commit(message_, ports.qubits, ports.h1, ports.h2);
    }
    BasisString open(SenderPorts &) override { return committer_->open(); }
    bool decide(const OpenResult &out) override { return out.accepted() && *out.message == message_; }

   private:
    Bits message_;
    std::optional<Committer> committer_;
};

class WrongOpening final : public SenderEnvironment {
   public:
    Commitment commit(SenderPorts &ports) override {
        committer_.emplace(ports.params, ports.rng.next());
        commitment_ = committer_->commit(Bits::random(ports.params.message_len(), ports.rng), ports.qubits,
                                         ports.h1, ports.h2);
        return commitment_;
    }
    BasisString open(SenderPorts &ports) override {
        BasisString honest = committer_->open();
        for (int attempt = 0; attempt < 64; ++attempt) {
            BasisString candidate = random_bases(ports.params.n(), ports.rng);
            if (candidate != honest && ports.h2.query(h2_query(candidate)) != commitment_.c2) return candidate;
        }
        return honest;
    }
    bool decide(const OpenResult &out) override { return !out.accepted(); }

   private:
    std::optional<Committer> committer_;
    Commitment commitment_;
};

class RandomMask final : public SenderEnvironment {
   public:
    Commitment commit(SenderPorts &ports) override {
        bases_ = random_bases(ports.params.n(), ports.rng);
        ports.qubits.measure_all(bases_);
        return {Bits::random(ports.params.message_len(), ports.rng), ports.h2.query(h2_query(bases_))};
    }
    BasisString open(SenderPorts &) override { return bases_; }
    bool decide(const OpenResult &out) override { return out.accepted() && (*out.message)[0]; }

   private:
    BasisString bases_;
};

template <class Env, class Factory>
Factory factory_of() {
    return [] { return std::make_unique<Env>(); };
}

}  // namespace

std::vector<Distinguisher> shipped_distinguishers(const ProtocolParams &params) {
    std::vector<Distinguisher> out;
    auto honest = [&](std::string name, HonestEnvironmentFactory f) {
        out.push_back({std::move(name), "soundness", honest_trial(World::Real, params, f),
                       honest_trial(World::Ideal, params, f)});
    };
    auto receiver = [&](std::string name, ReceiverEnvironmentFactory f) {
        out.push_back({std::move(name), "concealing", receiver_trial(World::Real, params, f),
                       receiver_trial(World::Ideal, params, f)});
    };
    auto sender = [&](std::string name, SenderEnvironmentFactory f) {
        out.push_back({std::move(name), "binding", sender_trial(World::Real, params, f),
                       sender_trial(World::Ideal, params, f)});
    };
    honest("message-check", factory_of<MessageCheck, HonestEnvironmentFactory>());
    receiver("honest-receiver", factory_of<HonestReceiver, ReceiverEnvironmentFactory>());
    receiver("message-guess", factory_of<MessageGuess, ReceiverEnvironmentFactory>());
    receiver("view-parity", factory_of<ViewParity, ReceiverEnvironmentFactory>());
    sender("honest-sender", factory_of<HonestSender, SenderEnvironmentFactory>());
    sender("wrong-opening", factory_of<WrongOpening, SenderEnvironmentFactory>());
    sender("random-mask", factory_of<RandomMask, SenderEnvironmentFactory>());
    return out;
}

}  // namespace qbsc
