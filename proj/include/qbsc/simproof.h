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

// Real and ideal systems for the three security conditions, the two
// simulators, and a Monte Carlo distinguisher harness.
//
// An environment plays the distinguisher: it picks the honest party's input,
// drives the corrupted party through the ports below, sees the honest party's
// output and returns one bit. The same environment runs unchanged against
// the real system (honest protocol machine + F_EPR + F_RO) and the ideal one
// (F_COM + simulator), so any behavioural gap shows up as advantage.
//
//   concealing (corrupted receiver):  real = pi_A + F_EPR + H1,H2
//                                     ideal = F_COM + sigma_B
//   binding (corrupted sender):       real = pi_B + F_EPR + H1,H2
//                                     ideal = F_COM + sigma_A

#ifndef QBSC_SIMPROOF_H
#define QBSC_SIMPROOF_H

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbsc/oracle.h"
#include "qbsc/protocol.h"
#include "qbsc/qsim.h"
#include "qbsc/transcript.h"

namespace qbsc {

enum class World { Real, Ideal };

std::string_view world_name(World world);

// -- honest parties (soundness) ----------------------------------------------

class HonestEnvironment {
   public:
    virtual ~HonestEnvironment() = default;
    virtual Bits choose_message(const ProtocolParams &params, Rng &rng) = 0;
    virtual bool decide(const Bits &message, const OpenResult &receiver_output) = 0;
};

bool run_honest_world(World world, const ProtocolParams &params, HonestEnvironment &env, std::uint64_t seed);

// -- corrupted receiver (concealing) -----------------------------------------

/// What a corrupted receiver can touch: its halves, both oracles (through
/// budgeted views) and private randomness.
struct ReceiverPorts {
    const ProtocolParams &params;
    EprHalf qubits;
    Oracle &h1;
    Oracle &h2;
    Rng &rng;
};

class ReceiverEnvironment {
   public:
    virtual ~ReceiverEnvironment() = default;
    /// Input for the honest sender (real) or for F_COM (ideal).
    virtual Bits choose_message(const ProtocolParams &params, Rng &rng) = 0;
    virtual void on_setup(ReceiverPorts &) {}
    virtual void on_commit(ReceiverPorts &ports, const Commitment &c) = 0;
    virtual void on_open(ReceiverPorts &ports, const BasisString &bases) = 0;
    virtual bool decide() = 0;
};

struct ReceiverRun {
    bool decision = false;
    Bits message;
    /// Everything that crossed the receiver's interface.
    Transcript transcript;
    // sigma_B bookkeeping; unused in the real world.
    bool premature_program_point = false;
    std::size_t programmed_points = 0;
};

ReceiverRun run_receiver_real(const ProtocolParams &params, ReceiverEnvironment &env, std::uint64_t seed,
                              QueryBudget budget = {});

/// Ideal system with sigma_B: simulated F_EPR (sigma_B keeps side A), honest
/// H2, and an H1 that is programmed at b|O with m ^ c1 once F_COM delivers m.
/// c1 and b are drawn uniformly on the receipt, independently of m. A
/// receiver that queried H1 at b|O before the opening gets a uniform answer
/// and the run is flagged premature_program_point.
ReceiverRun sigma_b_run(const ProtocolParams &params, ReceiverEnvironment &env, std::uint64_t seed,
                        QueryBudget budget = {});

// -- corrupted sender (binding) ----------------------------------------------

struct SenderPorts {
    const ProtocolParams &params;
    EprHalf qubits;
    Oracle &h1;
    Oracle &h2;
    Rng &rng;
};

class SenderEnvironment {
   public:
    virtual ~SenderEnvironment() = default;
    virtual void on_setup(SenderPorts &) {}
    virtual Commitment commit(SenderPorts &ports) = 0;
    virtual BasisString open(SenderPorts &ports) = 0;
    virtual bool decide(const OpenResult &receiver_output) = 0;
};

struct SenderRun {
    bool decision = false;
    OpenResult receiver_output;
    Transcript transcript;
    // sigma_A bookkeeping; unused in the real world.
    std::optional<BasisString> extracted_bases;
    Bits extracted_message;
    bool extraction_miss = false;
    bool ambiguous_extraction = false;
    bool opened = false;
};

SenderRun run_sender_real(const ProtocolParams &params, SenderEnvironment &env, std::uint64_t seed,
                          QueryBudget budget = {});

/// Ideal system with sigma_A: simulated F_EPR (sigma_A keeps side B) and
/// logged H1/H2. On (c1, c2) it extracts b as the earliest logged n-bit H2
/// query answered with c2, measures its halves in b to get O, and commits
/// c1 ^ H1(b|O) to F_COM. No preimage: commits 0^{2n} and never opens.
/// At opening it relays `open` iff the sender's basis string equals b.
SenderRun sigma_a_ideal(const ProtocolParams &params, SenderEnvironment &env, std::uint64_t seed,
                        QueryBudget budget = {});

using SenderEnvironmentFactory = std::function<std::unique_ptr<SenderEnvironment>()>;

struct BindingComparison {
    SenderRun real;
    SenderRun ideal;
    bool diverged() const { return real.receiver_output != ideal.receiver_output; }
};

/// Runs a fresh environment from `make_env` in both worlds under one seed.
BindingComparison sigma_a_run(const ProtocolParams &params, const SenderEnvironmentFactory &make_env,
                              std::uint64_t seed, QueryBudget budget = {});

// -- distinguisher harness ---------------------------------------------------

struct AdvantageEstimate {
    double advantage = 0.0;  // |p_real - p_ideal|
    double p_real = 0.0;
    double p_ideal = 0.0;
    std::size_t trials = 0;
    double halfwidth = 0.0;  // advantage_halfwidth at the pooled rate

    bool within_noise() const { return advantage <= halfwidth; }
};

/// One trial of one world with a fresh environment; returns the environment's bit.
using WorldTrial = std::function<bool(std::uint64_t seed)>;

/// Trial i of both worlds uses derive_seed(seed, i). Refuses fewer than 100 trials.
AdvantageEstimate estimate_advantage(const WorldTrial &real, const WorldTrial &ideal, std::size_t trials,
                                     std::uint64_t seed);

using HonestEnvironmentFactory = std::function<std::unique_ptr<HonestEnvironment>()>;
using ReceiverEnvironmentFactory = std::function<std::unique_ptr<ReceiverEnvironment>()>;

WorldTrial honest_trial(World world, const ProtocolParams &params, HonestEnvironmentFactory make_env);
WorldTrial receiver_trial(World world, const ProtocolParams &params, ReceiverEnvironmentFactory make_env,
                          QueryBudget budget = {});
WorldTrial sender_trial(World world, const ProtocolParams &params, SenderEnvironmentFactory make_env,
                        QueryBudget budget = {});

struct Distinguisher {
    std::string name;
    std::string condition;  // "soundness", "concealing" or "binding"
    WorldTrial real;
    WorldTrial ideal;
};

/// Environments that stay within the honest query budget:
///   soundness/message-check     random m, output [Bob outputs m]
///   concealing/honest-receiver  receiver follows pi_B, output [decoded == m]
///   concealing/message-guess    m in {0..0, 1..1}, guess from c1 majority
///   concealing/view-parity      parity of c1, b and the receiver's outcomes
///   binding/honest-sender       sender follows pi_A, output [Bob outputs m]
///   binding/wrong-opening       open some b' with H2(b') != c2, output [Reject]
///   binding/random-mask         random c1 with honest b, output first bit
std::vector<Distinguisher> shipped_distinguishers(const ProtocolParams &params);

}  // namespace qbsc

#endif  // QBSC_SIMPROOF_H
