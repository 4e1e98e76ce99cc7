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

#ifndef QBSC_ATTACKS_H
#define QBSC_ATTACKS_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "qbsc/oracle.h"
#include "qbsc/protocol.h"
#include "qbsc/qsim.h"
#include "qbsc/simproof.h"
#include "qbsc/transcript.h"

namespace qbsc {

// -- channel model -----------------------------------------------------------

/// Hook for an adversary sitting between the parties. It may rewrite the
/// classical messages in place and may replace the EPR source.
class Interceptor {
   public:
    virtual ~Interceptor() = default;

    virtual bool substitutes_source() const { return false; }
    /// With a substituted source: `with_alice` is entangled with Alice's
    /// protocol qubits, `with_bob` with Bob's.
    virtual void on_source(EprHalf /*with_alice*/, EprHalf /*with_bob*/) {}
    virtual void on_commit(Commitment &) {}
    virtual void on_open(BasisString &) {}
    /// Runs after the (possibly rewritten) opening reached Bob.
    virtual void after_open(const BasisString &, Oracle & /*h1*/) {}
};

enum class InterceptorAction { Forward, TamperCommit, TamperOpen, SubstituteSource };

std::string_view action_name(InterceptorAction action);

/// Performs exactly one action and otherwise forwards.
class ScriptedInterceptor final : public Interceptor {
   public:
    explicit ScriptedInterceptor(InterceptorAction action) : action_(action) {}

    bool substitutes_source() const override { return action_ == InterceptorAction::SubstituteSource; }
    void on_commit(Commitment &c) override;
    void on_open(BasisString &bases) override;

   private:
    InterceptorAction action_;
};

/// Plays the source to both parties with two independent registers, forwards
/// every message, and after the opening measures her partners of Alice's
/// qubits in b to recover m = c1 ^ H1(b|O).
class MitmEve final : public Interceptor {
   public:
    bool substitutes_source() const override { return true; }
    void on_source(EprHalf with_alice, EprHalf with_bob) override;
    void on_commit(Commitment &c) override { commitment_ = c; }
    void after_open(const BasisString &bases, Oracle &h1) override;

    const std::optional<Bits> &recovered() const { return recovered_; }

   private:
    std::optional<EprHalf> with_alice_;
    Commitment commitment_;
    std::optional<Bits> recovered_;
};

struct ChannelConfig {
    /// Tamper-evident classical channel: a rewritten message aborts the
    /// session, and the pre-protocol correlation check runs end to end
    /// between Alice and Bob so a substituted source is caught there.
    bool authenticated = false;
    std::shared_ptr<Interceptor> interceptor;
    /// Pairs sacrificed to the correlation check, kept apart from the n
    /// protocol pairs. Any disagreement aborts.
    std::size_t estimation_pairs = 64;
};

struct ChannelRun {
    OpenResult receiver_output;
    bool auth_failure = false;
    std::string abort_reason;
    /// Disagreement rates seen by Alice and by Bob in the correlation check.
    double alice_error = 0.0;
    double bob_error = 0.0;
    Transcript transcript;
};

/// Honest Alice and Bob over a channel with an optional interceptor.
/// Seed streams: Epr, Estimation, H1, H2, Alice, Adversary.
ChannelRun run_channel_session(const ProtocolParams &params, const Bits &message, const ChannelConfig &channel,
                               std::uint64_t seed);

struct MitmOutcome {
    std::optional<Bits> eve_message;
    bool auth_failure = false;
    OpenResult receiver_output;
};

MitmOutcome mitm_eve_run(const ProtocolParams &params, const Bits &message, bool authenticated, std::uint64_t seed);

// -- binding: second-preimage forger -----------------------------------------

struct ForgeOutcome {
    /// Bob accepted an opening b' != b.
    bool success = false;
    std::size_t flipped = 0;
    std::size_t search_queries = 0;
    BasisString committed;
    BasisString opened;
    Bits intended;
    OpenResult receiver_output;
    /// After a successful forgery, Alice's prediction of Bob's message (her
    /// own outcomes on agreeing positions, coin flips elsewhere) was right.
    bool prediction_hit = false;
};

/// Honest commit, then up to `search_budget` H2 queries on distinct random
/// b' != b looking for H2(b') = c2. Opens b' when found, b otherwise.
ForgeOutcome binding_forge_run(const ProtocolParams &params, std::size_t search_budget, std::uint64_t seed);

// -- concealing: query-bounded guesser ---------------------------------------

struct GuessOutcome {
    bool success = false;
    bool basis_found = false;
    bool found_true_basis = false;
    std::size_t h2_queries = 0;
};

/// Before the opening, queries H2 on distinct random candidates until one
/// hits c2, measures in it and outputs c1 ^ H1(b^|O^). With no hit, or no
/// H1 budget left, outputs a uniform guess.
GuessOutcome concealing_guess_run(const ProtocolParams &params, QueryBudget budget, std::uint64_t seed);

// -- binding: free-collision sender against sigma_A --------------------------

/// Queries H2 on `queries` distinct random basis strings (capped at 2^n). On
/// the first repeated response it commits with the earlier string and opens
/// the later one; otherwise it commits and opens honestly.
SenderEnvironmentFactory collision_sender(std::size_t queries);

/// Lazily enumerates distinct n-bit strings in uniformly random order (a
/// partial Fisher-Yates over the 2^n values), skipping `exclude`. The order
/// of the first k draws does not depend on how many are drawn later, so
/// runs with different budgets over one seed see nested candidate lists.
class CandidateEnumerator {
   public:
    CandidateEnumerator(std::size_t n, std::optional<Bits> exclude, Rng &rng);

    /// nullopt once every string has been produced.
    std::optional<Bits> next();

   private:
    std::size_t n_;
    std::optional<Bits> exclude_;
    Rng *rng_;
    std::uint64_t total_;
    std::uint64_t drawn_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

}  // namespace qbsc

#endif  // QBSC_ATTACKS_H
