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

// Ideal resources: the trusted EPR source and the commitment functionality.
// The random oracle lives in oracle.h.

#ifndef QBSC_FUNCTIONALITIES_H
#define QBSC_FUNCTIONALITIES_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbsc/bits.h"
#include "qbsc/qsim.h"

namespace qbsc {

enum class Party { Alice, Bob };

std::string_view party_name(Party party);

/// Trusted source of n Bell pairs. The first request fixes n and distributes;
/// later requests are ignored and noted in the audit log.
class EprSource {
   public:
    explicit EprSource(std::uint64_t seed) : seed_(seed) {}

    /// Returns true when this request triggered the distribution.
    bool request(Party from, std::size_t n);

    bool distributed() const { return reg_ != nullptr; }
    std::size_t size() const;
    /// Side A ("odd" qubits) and side B ("even" qubits). Throw
    /// ProtocolViolation before distribution. Handles stay valid across moves.
    EprHalf alice();
    EprHalf bob();

    const std::vector<std::string> &audit() const { return audit_; }

   private:
    std::uint64_t seed_;
    std::unique_ptr<EprRegister> reg_;
    std::vector<std::string> audit_;
};

/// Distributes n pairs on Alice's request.
EprSource epr_distribute(std::size_t n, std::uint64_t seed);

/// The receipt is a constant token: it carries nothing about the message.
struct Receipt {
    Bytes bytes() const { return {}; }
    bool operator==(const Receipt &) const = default;
};

enum class CommitmentState { Empty, Committed, Opened, Halted };

struct OpenDelivery {
    enum class Kind { Delivered, Halted, Ignored };
    Kind kind = Kind::Ignored;
    Bits message;
};

/// Single-use ideal commitment.
class IdealCommitment {
   public:
    /// Records the first message and returns the receipt; later commits are
    /// ignored (nullopt).
    std::optional<Receipt> commit(const Bits &message);
    /// Delivers the recorded message once. Opening with nothing recorded halts
    /// the functionality; any call after the first open or a halt is ignored.
    OpenDelivery open();

    CommitmentState state() const { return state_; }
    const std::optional<Bits> &recorded() const { return message_; }

   private:
    std::optional<Bits> message_;
    CommitmentState state_ = CommitmentState::Empty;
};

}  // namespace qbsc

#endif  // QBSC_FUNCTIONALITIES_H
