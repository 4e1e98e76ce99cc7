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

#include "qbsc/attacks.h"

#include <map>

#include "qbsc/errors.h"
#include "qbsc/functionalities.h"

namespace qbsc {

std::string_view action_name(InterceptorAction action) {
    switch (action) {
        case InterceptorAction::Forward:
            return "forward";
        case InterceptorAction::TamperCommit:
            return "tamper-commit";
        case InterceptorAction::TamperOpen:
            return "tamper-open";
        case InterceptorAction::SubstituteSource:
            return "substitute-source";
    }
    return "unknown";
}

void ScriptedInterceptor::on_commit(Commitment &c) {
    if (action_ == InterceptorAction::TamperCommit && !c.c1.empty()) c.c1.flip(0);
}

void ScriptedInterceptor::on_open(BasisString &bases) {
    if (action_ == InterceptorAction::TamperOpen && !bases.empty()) {
        bases[0] = bases[0] == Basis::Z ? Basis::X : Basis::Z;
    }
}

void MitmEve::on_source(EprHalf with_alice, EprHalf) { with_alice_ = with_alice; }

void MitmEve::after_open(const BasisString &bases, Oracle &h1) {
    if (!with_alice_ || bases.size() != with_alice_->size()) return;
    OutcomeString outcomes = with_alice_->measure_all(bases);
    recovered_ = commitment_.c1 ^ h1.query(h1_query(bases, outcomes));
}

namespace {

Bytes estimation_payload(std::size_t k, double error) {
    // k and the disagreement count, each 4 bytes big-endian.
    Bytes out = encode_count(k);
    Bytes bad = encode_count(static_cast<std::size_t>(error * static_cast<double>(k) + 0.5));
    out.insert(out.end(), bad.begin(), bad.end());
    return out;
}

}  // namespace

ChannelRun run_channel_session(const ProtocolParams &params, const Bits &message, const ChannelConfig &channel,
                               std::uint64_t seed) {
    ChannelRun run;
    Transcript &t = run.transcript;
    Interceptor *eve = channel.interceptor.get();
    const bool substituted = eve != nullptr && eve->substitutes_source();
    const std::size_t k = channel.estimation_pairs;
    const std::uint64_t epr_seed = derive_seed(seed, Stream::Epr);
    const std::uint64_t est_seed = derive_seed(seed, Stream::Estimation);
    const std::string source_name = substituted ? "eve" : "epr";

    auto abort = [&](std::string reason, bool auth) {
        run.abort_reason = std::move(reason);
        run.auth_failure = auth;
        run.receiver_output = OpenResult::reject();
        t.record("env", Channel::Classical, "abort", Bytes(run.abort_reason.begin(), run.abort_reason.end()));
    };

    // A trusted source hands out halves of the same pairs. A substituting
    // adversary entangles each party with herself instead.
    std::optional<EprRegister> protocol_ab, protocol_eb, estimate_ab, estimate_eb;
    t.record("alice->" + source_name, Channel::Quantum, "epr-request", encode_count(params.n()));
    protocol_ab.emplace(params.n(), substituted ? derive_seed(epr_seed, 1) : epr_seed);
    if (k > 0) estimate_ab.emplace(k, substituted ? derive_seed(est_seed, 1) : est_seed);
    if (substituted) {
        protocol_eb.emplace(params.n(), derive_seed(epr_seed, 2));
        if (k > 0) estimate_eb.emplace(k, derive_seed(est_seed, 2));
        eve->on_source(EprHalf(*protocol_ab, Side::B), EprHalf(*protocol_eb, Side::A));
    }
    EprHalf alice_qubits(*protocol_ab, Side::A);
    EprHalf bob_qubits(substituted ? *protocol_eb : *protocol_ab, Side::B);
    t.record(source_name + "->alice", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    t.record(source_name + "->bob", Channel::Quantum, "epr-deliver", encode_count(params.n()));

    if (k > 0) {
        Rng basis_rng(derive_seed(seed, Stream::Adversary));
        EprHalf alice_est(*estimate_ab, Side::A);
        EprHalf bob_est(substituted ? *estimate_eb : *estimate_ab, Side::B);
        if (substituted && !channel.authenticated) {
            // Eve answers each party's half of the check with her own halves.
            run.alice_error = estimate_correlation(alice_est, EprHalf(*estimate_ab, Side::B), k, basis_rng);
            run.bob_error = estimate_correlation(EprHalf(*estimate_eb, Side::A), bob_est, k, basis_rng);
        } else {
            run.alice_error = run.bob_error = estimate_correlation(alice_est, bob_est, k, basis_rng);
        }
        t.record("alice->bob", Channel::Classical, "estimate", estimation_payload(k, run.alice_error));
        t.record("bob->alice", Channel::Classical, "estimate", estimation_payload(k, run.bob_error));
        if (run.alice_error > 0.0 || run.bob_error > 0.0) {
            abort(channel.authenticated ? "auth-failure: correlation check" : "correlation check", channel.authenticated);
            return run;
        }
    }

    RandomOracle h1(params.h1_range(), derive_seed(seed, Stream::H1));
    RandomOracle h2(params.h2_range(), derive_seed(seed, Stream::H2));
    RecordingOracle alice_h1(h1, t, "alice->h1"), alice_h2(h2, t, "alice->h2");
    RecordingOracle bob_h1(h1, t, "bob->h1"), bob_h2(h2, t, "bob->h2");
    RecordingOracle eve_h1(h1, t, "eve->h1");

    Committer alice(params, derive_seed(seed, Stream::Alice));
    Receiver bob(params);

    const Commitment sent = alice.commit(message, alice_qubits, alice_h1, alice_h2);
    Commitment delivered = sent;
    if (eve) eve->on_commit(delivered);
    t.record("alice->bob", Channel::Classical, "commit", delivered.bytes());
    if (channel.authenticated && delivered != sent) {
        abort("auth-failure: commit message altered", true);
        return run;
    }
    bob.receive_commit(delivered);
    t.record("bob->env", Channel::Classical, "receipt", Receipt{}.bytes());

    const BasisString opened = alice.open();
    BasisString forwarded = opened;
    if (eve) eve->on_open(forwarded);
    t.record("alice->bob", Channel::Classical, "open", encode_bases(forwarded).pack());
    if (channel.authenticated && forwarded != opened) {
        abort("auth-failure: open message altered", true);
        return run;
    }
    run.receiver_output = bob.open(forwarded, bob_qubits, bob_h1, bob_h2);
    t.record("bob->env", Channel::Classical, "verdict", Bytes{static_cast<std::uint8_t>(run.receiver_output.accepted())});
    if (eve) eve->after_open(forwarded, eve_h1);
    return run;
}

MitmOutcome mitm_eve_run(const ProtocolParams &params, const Bits &message, bool authenticated, std::uint64_t seed) {
    auto eve = std::make_shared<MitmEve>();
    ChannelConfig channel;
    channel.authenticated = authenticated;
    channel.interceptor = eve;
    ChannelRun run = run_channel_session(params, message, channel, seed);
    return {eve->recovered(), run.auth_failure, run.receiver_output};
}

CandidateEnumerator::CandidateEnumerator(std::size_t n, std::optional<Bits> exclude, Rng &rng)
    : n_(n), exclude_(std::move(exclude)), rng_(&rng) {
    if (n == 0 || n > 63) {
        throw InvalidParameter("CandidateEnumerator: n must be in [1, 63]");
    }
    total_ = std::uint64_t{1} << n;
}

std::optional<Bits> CandidateEnumerator::next() {
    while (drawn_ < total_) {
        // Virtual array v[i] = i, with displaced entries kept in swapped_.
        auto at = [&](std::uint64_t i) {
            auto it = swapped_.find(i);
            return it == swapped_.end() ? i : it->second;
        };
        std::uint64_t j = drawn_ + rng_->below(total_ - drawn_);
        std::uint64_t value = at(j);
        swapped_[j] = at(drawn_);
        swapped_.erase(drawn_);
        ++drawn_;
        Bits candidate = Bits::from_uint(value, n_);
        if (exclude_ && candidate == *exclude_) continue;
        return candidate;
    }
    return std::nullopt;
}

namespace {

class Forger final : public SenderEnvironment {
   public:
    Forger(std::size_t search_budget, ForgeOutcome &out) : search_budget_(search_budget), out_(&out) {}

    Commitment commit(SenderPorts &ports) override {
        out_->intended = Bits::random(ports.params.message_len(), ports.rng);
        committer_.emplace(ports.params, ports.rng.next());
        commitment_ = committer_->commit(out_->intended, ports.qubits, ports.h1, ports.h2);
        out_->committed = committer_->bases();
        return commitment_;
    }

    BasisString open(SenderPorts &ports) override {
        BasisString honest = committer_->open();
        CandidateEnumerator candidates(ports.params.n(), encode_bases(honest), ports.rng);
        std::optional<BasisString> forged;
        try {
            for (std::size_t i = 0; i < search_budget_ && !forged; ++i) {
                auto candidate = candidates.next();
                if (!candidate) break;
                ++out_->search_queries;
                if (ports.h2.query(*candidate) == commitment_.c2) forged = decode_bases(*candidate);
            }
        } catch (const BudgetExceeded &) {
        }
        if (!forged) {
            out_->opened = honest;
            return honest;
        }
        out_->opened = *forged;
        // Bob's outcome agrees with ours where the bases agree and is a fair
        // coin elsewhere; guess those coins.
        OutcomeString guess = committer_->outcomes();
        for (std::size_t i = 0; i < forged->size(); ++i) {
            if ((*forged)[i] != honest[i]) {
                ++out_->flipped;
                guess.set(i, ports.rng.bit());
            }
        }
        predicted_ = commitment_.c1 ^ ports.h1.query(h1_query(*forged, guess));
        return *forged;
    }

    bool decide(const OpenResult &out) override {
        out_->receiver_output = out;
        out_->success = out.accepted() && out_->opened != out_->committed;
        out_->prediction_hit = out_->success && predicted_ && *out.message == *predicted_;
        return out_->success;
    }

   private:
    std::size_t search_budget_;
    ForgeOutcome *out_;
    std::optional<Committer> committer_;
    Commitment commitment_;
    std::optional<Bits> predicted_;
};

class Guesser final : public ReceiverEnvironment {
   public:
    explicit Guesser(GuessOutcome &out) : out_(&out) {}

    Bits choose_message(const ProtocolParams &params, Rng &rng) override {
        message_ = Bits::random(params.message_len(), rng);
        return message_;
    }

    void on_commit(ReceiverPorts &ports, const Commitment &c) override {
        CandidateEnumerator candidates(ports.params.n(), std::nullopt, ports.rng);
        try {
            while (!found_) {
                auto candidate = candidates.next();
                if (!candidate) break;
                ++out_->h2_queries;
                if (ports.h2.query(*candidate) == c.c2) found_ = decode_bases(*candidate);
            }
        } catch (const BudgetExceeded &) {
        }
        out_->basis_found = found_.has_value();
        if (found_) {
            OutcomeString outcomes = ports.qubits.measure_all(*found_);
            try {
                guess_ = c.c1 ^ ports.h1.query(h1_query(*found_, outcomes));
                return;
            } catch (const BudgetExceeded &) {
            }
        }
        guess_ = Bits::random(ports.params.message_len(), ports.rng);
    }

    void on_open(ReceiverPorts &, const BasisString &bases) override {
        out_->found_true_basis = found_ && *found_ == bases;
    }

    bool decide() override {
        out_->success = guess_ == message_;
        return out_->success;
    }

   private:
    GuessOutcome *out_;
    Bits message_;
    Bits guess_;
    std::optional<BasisString> found_;
};

class CollisionSender final : public SenderEnvironment {
   public:
    explicit CollisionSender(std::size_t queries) : queries_(queries) {}

    Commitment commit(SenderPorts &ports) override {
        const std::size_t n = ports.params.n();
        CandidateEnumerator candidates(n, std::nullopt, ports.rng);
        std::map<Bits, Bits> seen;  // response -> query
        std::optional<Bits> first;
        try {
            for (std::size_t i = 0; i < queries_; ++i) {
                auto candidate = candidates.next();
                if (!candidate) break;
                if (!first) first = *candidate;
                Bits response = ports.h2.query(*candidate);
                if (auto it = seen.find(response); it != seen.end()) {
                    commit_bases_ = decode_bases(it->second);
                    open_bases_ = decode_bases(*candidate);
                    break;
                }
                seen.emplace(std::move(response), *candidate);
            }
        } catch (const BudgetExceeded &) {
        }
        if (commit_bases_.empty()) {
            // No collision: behave honestly with a basis string that is the
            // only logged preimage of its response.
            commit_bases_ = first ? decode_bases(*first) : random_bases(n, ports.rng);
            open_bases_ = commit_bases_;
        }
        Bits message = Bits::random(ports.params.message_len(), ports.rng);
        OutcomeString outcomes = ports.qubits.measure_all(commit_bases_);
        return {message ^ ports.h1.query(h1_query(commit_bases_, outcomes)), ports.h2.query(h2_query(commit_bases_))};
    }

    BasisString open(SenderPorts &) override { return open_bases_; }
    bool decide(const OpenResult &out) override { return out.accepted(); }

   private:
    std::size_t queries_;
    BasisString commit_bases_;
    BasisString open_bases_;
};

}  // namespace

ForgeOutcome binding_forge_run(const ProtocolParams &params, std::size_t search_budget, std::uint64_t seed) {
    ForgeOutcome out;
    Forger forger(search_budget, out);
    QueryBudget budget;
    // One H2 query for the honest commitment, the rest for the search.
    if (search_budget < QueryBudget::kUnlimited) budget.h2 = search_budget + 1;
    run_sender_real(params, forger, seed, budget);
    return out;
}

GuessOutcome concealing_guess_run(const ProtocolParams &params, QueryBudget budget, std::uint64_t seed) {
    GuessOutcome out;
    Guesser guesser(out);
    run_receiver_real(params, guesser, seed, budget);
    return out;
}

SenderEnvironmentFactory collision_sender(std::size_t queries) {
    return [queries] { return std::make_unique<CollisionSender>(queries); };
}

}  // namespace qbsc
