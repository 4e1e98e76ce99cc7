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

// PUF devices standing in for H1 and H2, and the bad-PUF scenarios.
//
// Responses are noise free. A device is owned by one session; possession is
// modelled by who is allowed to call which method, checked against a Party.

#ifndef QBSC_PUF_H
#define QBSC_PUF_H

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qbsc/functionalities.h"
#include "qbsc/oracle.h"
#include "qbsc/protocol.h"
#include "qbsc/transcript.h"

namespace qbsc {

/// Honest strong PUF: a fixed challenge/response map behind a classical
/// interface. Seeded like a RandomOracle, it answers identically.
class StrongPuf : public Oracle {
   public:
    StrongPuf(std::size_t range_len, std::uint64_t seed) : table_(range_len, seed) {}

    Bits query(const Bits &challenge) override { return table_.query(challenge); }
    std::size_t range_len() const override { return table_.range_len(); }

   private:
    friend class BadPuf;
    OracleTable table_;
};

/// OracleFactory producing honest devices.
std::unique_ptr<Oracle> make_strong_puf(std::size_t range_len, std::uint64_t seed);

/// A maliciously manufactured device. `simulatable`: the manufacturer holds
/// the response map, so it can evaluate the device without touching it and
/// can fix responses it has not yet produced. `logging`: a hidden memory
/// keeps every applied challenge in order.
class BadPuf final : public Oracle {
   public:
    BadPuf(std::size_t range_len, std::uint64_t seed, Party manufacturer, bool simulatable, bool logging);

    /// Logged when logging is on. Simulation does not go through here.
    Bits query(const Bits &challenge) override;
    std::size_t range_len() const override { return base_.range_len(); }

    Party manufacturer() const { return manufacturer_; }
    bool simulatable() const { return simulatable_; }
    bool logging() const { return logging_; }

    /// Throws ProtocolViolation unless logging and `reader` is the manufacturer.
    const std::vector<Bits> &challenge_log(Party reader) const;
    /// Evaluates the response map. Throws ProtocolViolation unless
    /// simulatable and `reader` is the manufacturer.
    Bits simulate(Party reader, const Bits &challenge);
    /// Fixes the response at a challenge nobody has evaluated yet. Same
    /// access rule as simulate.
    ProgramResult plant(Party reader, const Bits &challenge, const Bits &response);
    std::size_t simulation_count() const { return simulations_; }

   private:
    void require_simulation(Party reader) const;

    StrongPuf base_;
    Party manufacturer_;
    bool simulatable_;
    bool logging_;
    std::vector<Bits> log_;
    std::size_t simulations_ = 0;
};

/// One challenge applied to any device.
inline Bits puf_query(Oracle &device, const Bits &challenge) { return device.query(challenge); }

struct PufConfig {
    /// nullopt: honest devices.
    std::optional<Party> manufacturer;
    bool simulatable = false;
    bool logging = false;
    /// The manufacturer may use its devices' back doors between commit and open.
    bool access_before_open = true;
    /// Alice-manufactured simulatable devices: number of basis positions in
    /// which the second preimage differs from b. Alice cheats only when set.
    std::optional<std::size_t> flips;
    /// Alice also sends the claimed message at opening (the non-private variant).
    bool send_message = true;
    /// The devices come from an earlier session with their logs intact.
    bool reuse_devices = false;
};

struct LeakageReport {
    std::optional<Party> manufacturer;
    /// Log contents read by the manufacturer, per device.
    std::vector<Bits> h1_log;
    std::vector<Bits> h2_log;
    /// Log entries left over from an earlier session on reused devices.
    std::size_t prior_session_entries = 0;
    /// Evaluations of the response maps by the manufacturer.
    std::size_t simulation_queries = 0;
    bool planted = false;
    std::size_t basis_candidates = 0;
    bool basis_learned_before_open = false;
    bool message_learned_before_open = false;
    std::optional<Bits> learned_message;

    bool empty() const {
        return h1_log.empty() && h2_log.empty() && simulation_queries == 0 && !planted &&
               !basis_learned_before_open && !message_learned_before_open;
    }
};

struct PufVariantRun {
    bool accepted = false;
    /// What Bob computed, before comparing with the claim.
    OpenResult receiver_output;
    Bits committed;
    std::optional<Bits> claimed;
    /// Bob accepted a claimed message other than the committed one.
    bool forged_accept = false;
    std::size_t flipped = 0;
    LeakageReport leakage;
    Transcript transcript;
};

/// The protocol with H1 and H2 realized as devices per `config`. Bob accepts
/// iff H2(b') = c2 and, when a message is sent, c1 ^ H1(b'|O') equals it.
///
/// Bob as manufacturer, before the opening, reads the logs (logging) or
/// inverts c2 through the response map and measures in the first preimage
/// (simulatable). Alice as manufacturer with `flips = k` commits honestly,
/// plants H2(b') = c2 for a b' differing from b in k random positions,
/// predicts Bob's outcomes (hers where bases agree, coin flips elsewhere) and
/// claims c1 ^ H1(b'|prediction).
/// Seed streams: Epr, H1, H2, Alice, Bob, Adversary, Environment.
PufVariantRun run_puf_protocol_variant(const ProtocolParams &params, const Bits &message, const PufConfig &config,
                                       std::uint64_t seed);

}  // namespace qbsc

#endif  // QBSC_PUF_H
