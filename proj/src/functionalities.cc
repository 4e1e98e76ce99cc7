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

#include "qbsc/errors.h"

namespace qbsc {

std::string_view party_name(Party party) { return party == Party::Alice ? "alice" : "bob"; }

bool EprSource::request(Party from, std::size_t n) {
    if (n == 0) {
        throw InvalidParameter("EprSource: n must be at least 1");
    }
    if (reg_) {
        audit_.push_back("ignored request n=" + std::to_string(n) + " from " + std::string(party_name(from)) +
                         " (already distributed n=" + std::to_string(reg_->size()) + ")");
        return false;
    }
    reg_ = std::make_unique<EprRegister>(n, seed_);
    audit_.push_back("distributed n=" + std::to_string(n) + " on request from " + std::string(party_name(from)));
    return true;
}

std::size_t EprSource::size() const { return reg_ ? reg_->size() : 0; }

EprHalf EprSource::alice() {
    if (!reg_) throw ProtocolViolation("EprSource: no pairs distributed yet");
    return EprHalf(*reg_, Side::A);
}

EprHalf EprSource::bob() {
    if (!reg_) throw ProtocolViolation("EprSource: no pairs distributed yet");
    return EprHalf(*reg_, Side::B);
}

EprSource epr_distribute(std::size_t n, std::uint64_t seed) {
    EprSource source(seed);
    source.request(Party::Alice, n);
    return source;
}

std::optional<Receipt> IdealCommitment::commit(const Bits &message) {
    if (state_ != CommitmentState::Empty) {
        return std::nullopt;
    }
    message_ = message;
    state_ = CommitmentState::Committed;
    return Receipt{};
}

OpenDelivery IdealCommitment::open() {
    switch (state_) {
        case CommitmentState::Committed:
            state_ = CommitmentState::Opened;
            return {OpenDelivery::Kind::Delivered, *message_};
        case CommitmentState::Empty:
            state_ = CommitmentState::Halted;
            return {OpenDelivery::Kind::Halted, {}};
        case CommitmentState::Opened:
        case CommitmentState::Halted:
            break;
    }
    return {OpenDelivery::Kind::Ignored, {}};
}

}  // namespace qbsc
