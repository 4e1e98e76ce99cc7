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

#include "qbsc/errors.h"

namespace qbsc {

ProtocolParams::ProtocolParams(std::size_t n) : n_(n) {
    if (n == 0) {
        throw InvalidParameter("ProtocolParams: n must be at least 1");
    }
}

Bits h1_query(const BasisString &bases, const OutcomeString &outcomes) {
    return encode_bases(bases).concat(outcomes);
}

Bits h2_query(const BasisString &bases) { return encode_bases(bases); }

Commitment Committer::commit(const Bits &message, EprHalf qubits, Oracle &h1, Oracle &h2) {
    if (phase_ != CommitterPhase::Fresh) {
        throw ProtocolViolation("Committer: commit called twice");
    }
    if (message.size() != params_.message_len()) {
        throw InvalidParameter("Committer: message must be " + std::to_string(params_.message_len()) +
                               " bits, got " + std::to_string(message.size()));
    }
    if (qubits.size() != params_.n()) {
        throw InvalidParameter("Committer: expected " + std::to_string(params_.n()) + " qubits");
    }
    message_ = message;
    bases_ = random_bases(params_.n(), rng_);
    outcomes_ = qubits.measure_all(bases_);
    Commitment c{message ^ h1.query(h1_query(bases_, outcomes_)), h2.query(h2_query(bases_))};
    phase_ = CommitterPhase::Committed;
    return c;
}

BasisString Committer::open() {
    if (phase_ != CommitterPhase::Committed) {
        throw ProtocolViolation(phase_ == CommitterPhase::Fresh ? "Committer: open before commit"
                                                                 : "Committer: already opened");
    }
    phase_ = CommitterPhase::Opened;
    return bases_;
}

bool Receiver::receive_commit(const Commitment &c) {
    if (phase_ != ReceiverPhase::Waiting) {
        return false;
    }
    if (c.c1.size() != params_.h1_range() || c.c2.size() != params_.h2_range()) {
        phase_ = ReceiverPhase::Rejected;
        return false;
    }
    stored_ = c;
    phase_ = ReceiverPhase::Committed;
    return true;
}

OpenResult Receiver::open(const BasisString &bases, EprHalf qubits, Oracle &h1, Oracle &h2) {
    if (phase_ != ReceiverPhase::Committed) {
        return OpenResult::reject();
    }
    phase_ = ReceiverPhase::Done;
    if (bases.size() != params_.n() || qubits.size() != params_.n()) {
        return OpenResult::reject();
    }
    if (h2.query(h2_query(bases)) != stored_->c2) {
        return OpenResult::reject();
    }
    OutcomeString outcomes = qubits.measure_all(bases);
    return OpenResult::accept(stored_->c1 ^ h1.query(h1_query(bases, outcomes)));
}

std::unique_ptr<Oracle> make_random_oracle(std::size_t range_len, std::uint64_t seed) {
    return std::make_unique<RandomOracle>(range_len, seed);
}

Bytes encode_count(std::size_t n) {
    auto v = static_cast<std::uint32_t>(n);
    return {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
            static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

SessionResult run_honest_session(const ProtocolParams &params, const Bits &message, std::uint64_t seed,
                                 const OracleFactory &oracles) {
    SessionResult out;
    out.h1 = oracles(params.h1_range(), derive_seed(seed, Stream::H1));
    out.h2 = oracles(params.h2_range(), derive_seed(seed, Stream::H2));
    Transcript &t = out.transcript;
    try {
        EprSource source(derive_seed(seed, Stream::Epr));
        t.record("alice->epr", Channel::Quantum, "epr-request", encode_count(params.n()));
        source.request(Party::Alice, params.n());
        t.record("epr->alice", Channel::Quantum, "epr-deliver", encode_count(params.n()));
        t.record("epr->bob", Channel::Quantum, "epr-deliver", encode_count(params.n()));

        Committer alice(params, derive_seed(seed, Stream::Alice));
        Receiver bob(params);
        RecordingOracle alice_h1(*out.h1, t, "alice->h1");
        RecordingOracle alice_h2(*out.h2, t, "alice->h2");
        RecordingOracle bob_h1(*out.h1, t, "bob->h1");
        RecordingOracle bob_h2(*out.h2, t, "bob->h2");

        out.commitment = alice.commit(message, source.alice(), alice_h1, alice_h2);
        t.record("alice->bob", Channel::Classical, "commit", out.commitment.bytes());
        bob.receive_commit(out.commitment);
        t.record("bob->env", Channel::Classical, "receipt", Receipt{}.bytes());

        out.bases = alice.open();
        t.record("alice->bob", Channel::Classical, "open", encode_bases(out.bases).pack());
        out.result = bob.open(out.bases, source.bob(), bob_h1, bob_h2);
        t.record("bob->env", Channel::Classical, "verdict", Bytes{static_cast<std::uint8_t>(out.result.accepted())});
    } catch (const std::exception &e) {
        out.failure = e.what();
        out.result = OpenResult::reject();
    }
    return out;
}

Bits pad_message(const Bits &message, const ProtocolParams &params) {
    if (message.size() > params.message_len()) {
        throw InvalidParameter("pad_message: message longer than 2n bits");
    }
    return Bits(params.message_len() - message.size()).concat(message);
}

}  // namespace qbsc
