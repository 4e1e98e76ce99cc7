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

#include "qbsc/puf.h"

#include <algorithm>
#include <numeric>

#include "qbsc/errors.h"

namespace qbsc {

std::unique_ptr<Oracle> make_strong_puf(std::size_t range_len, std::uint64_t seed) {
    return std::make_unique<StrongPuf>(range_len, seed);
}

BadPuf::BadPuf(std::size_t range_len, std::uint64_t seed, Party manufacturer, bool simulatable, bool logging)
    : base_(range_len, seed), manufacturer_(manufacturer), simulatable_(simulatable), logging_(logging) {}

Bits BadPuf::query(const Bits &challenge) {
    if (logging_) log_.push_back(challenge);
    return base_.query(challenge);
}

const std::vector<Bits> &BadPuf::challenge_log(Party reader) const {
    if (!logging_) throw ProtocolViolation("challenge_log: device has no log");
    if (reader != manufacturer_) throw ProtocolViolation("challenge_log: only the manufacturer may read the log");
    return log_;
}

void BadPuf::require_simulation(Party reader) const {
    if (!simulatable_) throw ProtocolViolation("device is not simulatable");
    if (reader != manufacturer_) throw ProtocolViolation("only the manufacturer holds the response map");
}

Bits BadPuf::simulate(Party reader, const Bits &challenge) {
    require_simulation(reader);
    ++simulations_;
    return base_.table_.query(challenge);
}

ProgramResult BadPuf::plant(Party reader, const Bits &challenge, const Bits &response) {
    require_simulation(reader);
    return base_.table_.program(challenge, response);
}

namespace {

// An untranscribed honest session, used to age reused devices.
void run_prior_session(const ProtocolParams &params, Oracle &h1, Oracle &h2, std::uint64_t seed) {
    Rng rng(derive_seed(seed, Stream::Environment));
    Bits message = Bits::random(params.message_len(), rng);
    EprRegister reg(params.n(), derive_seed(seed, Stream::Epr));
    Committer alice(params, derive_seed(seed, Stream::Alice));
    Receiver bob(params);
    bob.receive_commit(alice.commit(message, EprHalf(reg, Side::A), h1, h2));
    bob.open(alice.open(), EprHalf(reg, Side::B), h1, h2);
}

std::vector<Bits> tail(const std::vector<Bits> &log, std::size_t from) {
    return {log.begin() + static_cast<std::ptrdiff_t>(std::min(from, log.size())), log.end()};
}

constexpr std::size_t kMaxInversionBits = 20;

}  // namespace

PufVariantRun run_puf_protocol_variant(const ProtocolParams &params, const Bits &message, const PufConfig &config,
                                       std::uint64_t seed) {
    const bool alice_cheats = config.flips.has_value();
    if (alice_cheats) {
        if (config.manufacturer != Party::Alice || !config.simulatable) {
            throw InvalidParameter("flips requires simulatable devices manufactured by Alice");
        }
        if (*config.flips == 0 || *config.flips > params.n()) {
            throw InvalidParameter("flips must be in [1, n]");
        }
    }
    if (message.size() != params.message_len()) {
        throw InvalidParameter("run_puf_protocol_variant: message must be 2n bits");
    }

    PufVariantRun run;
    run.committed = message;
    LeakageReport &leak = run.leakage;
    leak.manufacturer = config.manufacturer;
    Transcript &t = run.transcript;

    std::unique_ptr<Oracle> h1, h2;
    BadPuf *bad1 = nullptr, *bad2 = nullptr;
    if (config.manufacturer) {
        auto d1 = std::make_unique<BadPuf>(params.h1_range(), derive_seed(seed, Stream::H1), *config.manufacturer,
                                           config.simulatable, config.logging);
        auto d2 = std::make_unique<BadPuf>(params.h2_range(), derive_seed(seed, Stream::H2), *config.manufacturer,
                                           config.simulatable, config.logging);
        bad1 = d1.get();
        bad2 = d2.get();
        h1 = std::move(d1);
        h2 = std::move(d2);
    } else {
        h1 = make_strong_puf(params.h1_range(), derive_seed(seed, Stream::H1));
        h2 = make_strong_puf(params.h2_range(), derive_seed(seed, Stream::H2));
    }

    std::size_t prior1 = 0, prior2 = 0;
    if (config.reuse_devices) {
        run_prior_session(params, *h1, *h2, derive_seed(seed, Stream::Trial));
        if (config.logging && bad1) {
            prior1 = bad1->challenge_log(*config.manufacturer).size();
            prior2 = bad2->challenge_log(*config.manufacturer).size();
            leak.prior_session_entries = prior1 + prior2;
        }
    }

    RecordingOracle alice_h1(*h1, t, "alice->h1"), alice_h2(*h2, t, "alice->h2");
    RecordingOracle bob_h1(*h1, t, "bob->h1"), bob_h2(*h2, t, "bob->h2");

    EprSource source(derive_seed(seed, Stream::Epr));
    t.record("alice->epr", Channel::Quantum, "epr-request", encode_count(params.n()));
    source.request(Party::Alice, params.n());
    t.record("epr->alice", Channel::Quantum, "epr-deliver", encode_count(params.n()));
    t.record("epr->bob", Channel::Quantum, "epr-deliver", encode_count(params.n()));

    Committer alice(params, derive_seed(seed, Stream::Alice));
    const Commitment c = alice.commit(message, source.alice(), alice_h1, alice_h2);
    t.record("alice->bob", Channel::Classical, "commit", c.bytes());
    t.record("bob->env", Channel::Classical, "receipt", Receipt{}.bytes());

    // Bob's back door between commit and open.
    std::optional<BasisString> early_bases;
    OutcomeString early_outcomes;
    const bool bob_back_door = config.manufacturer == Party::Bob && config.access_before_open;
    if (bob_back_door && config.logging) {
        leak.h1_log = tail(bad1->challenge_log(Party::Bob), prior1);
        leak.h2_log = tail(bad2->challenge_log(Party::Bob), prior2);
        for (const Bits &q : leak.h2_log) {
            if (q.size() == params.n()) ++leak.basis_candidates;
        }
        for (const Bits &q : leak.h1_log) {
            if (q.size() == 2 * params.n()) {
                leak.learned_message = c.c1 ^ bob_h1.query(q);
                break;
            }
        }
    } else if (bob_back_door && config.simulatable && params.n() <= kMaxInversionBits) {
        const std::uint64_t domain = std::uint64_t{1} << params.n();
        for (std::uint64_t v = 0; v < domain; ++v) {
            Bits candidate = Bits::from_uint(v, params.n());
            if (bad2->simulate(Party::Bob, candidate) == c.c2) {
                if (!early_bases) early_bases = decode_bases(candidate);
                ++leak.basis_candidates;
            }
        }
        if (early_bases) {
            early_outcomes = source.bob().measure_all(*early_bases);
            leak.learned_message = c.c1 ^ bad1->simulate(Party::Bob, h1_query(*early_bases, early_outcomes));
        }
    }
    if (bob_back_door) {
        leak.basis_learned_before_open =
            (early_bases && *early_bases == alice.bases()) ||
            std::any_of(leak.h2_log.begin(), leak.h2_log.end(),
                        [&](const Bits &q) { return q == encode_bases(alice.bases()); });
        leak.message_learned_before_open = leak.learned_message == message;
    }

    // Opening, possibly to a second preimage planted by Alice.
    BasisString opened = alice.open();
    std::optional<Bits> claimed;
    if (config.send_message) claimed = message;
    if (alice_cheats) {
        Rng rng(derive_seed(seed, Stream::Adversary));
        std::vector<std::size_t> positions(params.n());
        std::iota(positions.begin(), positions.end(), 0);
        rng.shuffle(std::span<std::size_t>(positions));
        BasisString forged = opened;
        for (std::size_t i = 0; i < *config.flips; ++i) {
            Basis &b = forged[positions[i]];
            b = b == Basis::Z ? Basis::X : Basis::Z;
        }
        if (bad2->plant(Party::Alice, h2_query(forged), c.c2) == ProgramResult::Success) {
            leak.planted = true;
            OutcomeString guess = alice.outcomes();
            for (std::size_t i = 0; i < *config.flips; ++i) guess.set(positions[i], rng.bit());
            opened = forged;
            run.flipped = *config.flips;
            claimed = c.c1 ^ bad1->simulate(Party::Alice, h1_query(forged, guess));
        }
    }
    t.record("alice->bob", Channel::Classical, "open", encode_bases(opened).pack());
    if (claimed) t.record("alice->bob", Channel::Classical, "claim", claimed->pack());

    if (early_bases) {
        // Bob already measured in his own guess; he verifies with those outcomes.
        if (bob_h2.query(h2_query(opened)) == c.c2) {
            run.receiver_output = OpenResult::accept(c.c1 ^ bob_h1.query(h1_query(opened, early_outcomes)));
        }
    } else {
        Receiver bob(params);
        bob.receive_commit(c);
        run.receiver_output = bob.open(opened, source.bob(), bob_h1, bob_h2);
    }
    run.claimed = claimed;
    run.accepted = run.receiver_output.accepted() && (!claimed || *run.receiver_output.message == *claimed);
    run.forged_accept = run.accepted && claimed && *claimed != message;
    t.record("bob->env", Channel::Classical, "verdict", Bytes{static_cast<std::uint8_t>(run.accepted)});

    if (config.manufacturer == Party::Bob && config.logging && !config.access_before_open) {
        leak.h1_log = tail(bad1->challenge_log(Party::Bob), prior1);
        leak.h2_log = tail(bad2->challenge_log(Party::Bob), prior2);
    }
    if (bad1) leak.simulation_queries = bad1->simulation_count() + bad2->simulation_count();
    return run;
}

}  // namespace qbsc
