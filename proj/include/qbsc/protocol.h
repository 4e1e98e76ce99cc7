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

// Honest committer and receiver for the private bit-string commitment.
//
//   commit:  b <- {Z,X}^n, O <- measure own halves in b,
//            c1 = m ^ H1(b|O), c2 = H2(b)
//   open:    committer sends b only; the message itself never travels.
//   verify:  receiver checks H2(b) == c2, then measures in b to get O' and
//            outputs c1 ^ H1(b|O').
//
// Query encodings: b is n bits (Z=0, X=1); the H1 query is those n bits
// followed by the n outcome bits.

#ifndef QBSC_PROTOCOL_H
#define QBSC_PROTOCOL_H

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "qbsc/bits.h"
#include "qbsc/functionalities.h"
#include "qbsc/oracle.h"
#include "qbsc/qsim.h"
#include "qbsc/transcript.h"

namespace qbsc {

class ProtocolParams {
   public:
    /// Throws InvalidParameter for n == 0.
    explicit ProtocolParams(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t message_len() const { return 2 * n_; }
    std::size_t h1_range() const { return 2 * n_; }
    std::size_t h2_range() const { return n_; }

    bool operator==(const ProtocolParams &) const = default;

   private:
    std::size_t n_;
};

struct Commitment {
    Bits c1;
    Bits c2;

    /// Wire form: pack(c1 | c2).
    Bytes bytes() const { return c1.concat(c2).pack(); }
    bool operator==(const Commitment &) const = default;
};

Bits h1_query(const BasisString &bases, const OutcomeString &outcomes);
Bits h2_query(const BasisString &bases);

struct OpenResult {
    std::optional<Bits> message;

    static OpenResult accept(Bits m) { return {std::move(m)}; }
    static OpenResult reject() { return {}; }
    bool accepted() const { return message.has_value(); }
    bool operator==(const OpenResult &) const = default;
};

enum class CommitterPhase { Fresh, Committed, Opened };

/// Honest committer. All of its randomness (the basis string) comes from the
/// seed given at construction.
class Committer {
   public:
    Committer(const ProtocolParams &params, std::uint64_t seed) : params_(params), rng_(seed) {}

    /// Throws InvalidParameter on a wrong message length and
    /// ProtocolViolation when the committer was already used.
    Commitment commit(const Bits &message, EprHalf qubits, Oracle &h1, Oracle &h2);
    /// Returns the basis string. Throws ProtocolViolation unless Committed.
    BasisString open();

    CommitterPhase phase() const { return phase_; }
    const BasisString &bases() const { return bases_; }
    const OutcomeString &outcomes() const { return outcomes_; }
    const Bits &message() const { return message_; }

   private:
    ProtocolParams params_;
    Rng rng_;
    CommitterPhase phase_ = CommitterPhase::Fresh;
    Bits message_;
    BasisString bases_;
    OutcomeString outcomes_;
};

enum class ReceiverPhase { Waiting, Committed, Rejected, Done };

/// Honest receiver. Makes no oracle query before the opening arrives.
class Receiver {
   public:
    explicit Receiver(const ProtocolParams &params) : params_(params) {}

    /// Stores the commitment; returns false (and moves to Rejected) on a
    /// length mismatch.
    bool receive_commit(const Commitment &c);
    /// H2 check first; the halves are measured only if it passes. Anything
    /// malformed or out of order yields Reject.
    OpenResult open(const BasisString &bases, EprHalf qubits, Oracle &h1, Oracle &h2);

    ReceiverPhase phase() const { return phase_; }
    const std::optional<Commitment> &stored() const { return stored_; }

   private:
    ProtocolParams params_;
    ReceiverPhase phase_ = ReceiverPhase::Waiting;
    std::optional<Commitment> stored_;
};

using OracleFactory = std::function<std::unique_ptr<Oracle>(std::size_t range_len, std::uint64_t seed)>;

/// F_RO instances; the default factory for sessions.
std::unique_ptr<Oracle> make_random_oracle(std::size_t range_len, std::uint64_t seed);

/// Four-byte big-endian encoding of a pair count, used as the F_EPR payload.
Bytes encode_count(std::size_t n);

struct SessionResult {
    Transcript transcript;
    OpenResult result;
    Commitment commitment;
    BasisString bases;
    /// Set when a sub-operation threw; result is then Reject.
    std::optional<std::string> failure;
    std::unique_ptr<Oracle> h1;
    std::unique_ptr<Oracle> h2;
};

/// One honest three-phase run wired through F_EPR and two oracle instances.
/// Seed streams: Epr, H1, H2, Alice.
SessionResult run_honest_session(const ProtocolParams &params, const Bits &message, std::uint64_t seed,
                                 const OracleFactory &oracles = make_random_oracle);

/// Left-pads a short message with zeros up to 2n bits.
Bits pad_message(const Bits &message, const ProtocolParams &params);

}  // namespace qbsc

#endif  // QBSC_PROTOCOL_H
