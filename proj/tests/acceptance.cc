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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails. `--only N` runs criterion N alone.
//
// Seeds are fixed constants; targets come from tests/oracles.h.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "qbsc/attacks.h"
#include "qbsc/harness.h"
#include "qbsc/protocol.h"
#include "qbsc/puf.h"
#include "qbsc/qsim.h"
#include "qbsc/simproof.h"
#include "qbsc/stats.h"

using namespace qbsc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double max_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

ExperimentReport preset(const std::string &text) { return run_experiment(parse_config_text(text)); }

Outcome soundness() {
    ExperimentReport r = preset("experiment = soundness-sweep\nn = 16\ntrials = 10000\nseed = 101");
    bool pass = r.details["per_n"].size() == 4;
    std::string detail;
    for (const auto &row : r.details["per_n"]) {
        std::size_t n = row["n"], ok = row["successes"], trials = row["trials"];
        pass = pass && trials == 10000 && ok == trials;
        detail += fmt("n=%zu %zu/%zu ", n, ok, trials);
    }
    return {pass, detail + "(required: all accepted with m)"};
}

Outcome bell_model() {
    const std::size_t N = 100000;
    bool pass = true;
    std::string detail;
    std::uint64_t seed = 202;
    for (Basis a : {Basis::Z, Basis::X}) {
        for (Basis b : {Basis::Z, Basis::X}) {
            EprRegister reg(N, ++seed);
            std::array<std::size_t, 4> counts{};
            for (std::size_t i = 0; i < N; ++i) {
                bool oa = reg.measure(Side::A, i, a);
                bool ob = reg.measure(Side::B, i, b);
                ++counts[2 * oa + ob];
            }
            auto r = chi_square_goodness_of_fit(counts, sv_joint_distribution(a, b));
            pass = pass && r.p_value > 0.01;
            detail += fmt("%c%c p=%.3f ", basis_char(a), basis_char(b), r.p_value);
        }
    }
    return {pass, detail + "(required: p > 0.01)"};
}

Outcome concealing_blind() {
    ExperimentReport r = preset("experiment = concealing\nn = 2\ntrials = 20000\nq_h1 = 0\nq_h2 = 0\nseed = 303");
    double target = 1.0 / 16;
    return {std::abs(r.success_rate - target) <= 0.006,
            fmt("guess rate %.4f, target %.4f +- 0.006", r.success_rate, target)};
}

Outcome concealing_queries() {
    ExperimentReport r = preset("experiment = concealing\nn = 10\ntrials = 10000\nq_h2 = 64\nseed = 404");
    double analytic = qbsc_test::concealing_guess_rate(10, 64, true);
    return {std::abs(r.success_rate - 0.0625) <= 0.01,
            fmt("guess rate %.4f, target 0.0625 +- 0.01 (first-hit analysis %.4f)", r.success_rate, analytic)};
}

Outcome binding_collisions() {
    ExperimentReport r = preset("experiment = binding\nn = 8\ntrials = 10000\nq_h2 = 64\nseed = 505");
    double target = qbsc_test::any_hit(8, 64);
    return {std::abs(r.success_rate - target) <= 0.02,
            fmt("forge rate %.4f, target %.4f +- 0.02", r.success_rate, target)};
}

Outcome simulator_indistinguishability() {
    ExperimentReport r = preset("experiment = advantage\nn = 8\ntrials = 10000\nseed = 606");
    bool pass = !r.details["environments"].empty();
    std::string detail;
    for (const auto &e : r.details["environments"]) {
        bool ok = e["within_noise"].get<bool>();
        pass = pass && ok;
        detail += fmt("%s adv=%.4f/hw=%.4f%s ", e["name"].get<std::string>().c_str(), e["advantage"].get<double>(),
                      e["halfwidth"].get<double>(), ok ? "" : " EXCEEDED");
    }
    return {pass, detail};
}

Outcome sigma_a_extraction() {
    class HonestSender final : public SenderEnvironment {
       public:
        explicit HonestSender(Bits *committed) : committed_(committed) {}
        Commitment commit(SenderPorts &ports) override {
            *committed_ = Bits::random(ports.params.message_len(), ports.rng);
            committer_.emplace(ports.params, ports.rng.next());
            return committer_->commit(*committed_, ports.qubits, ports.h1, ports.h2);
        }
        BasisString open(SenderPorts &) override { return committer_->open(); }
        bool decide(const OpenResult &out) override { return out.accepted(); }

       private:
        Bits *committed_;
        std::optional<Committer> committer_;
    };
    ProtocolParams params(8);
    const std::size_t sessions = 10000;
    std::size_t matched = 0, misses = 0;
    for (std::size_t i = 0; i < sessions; ++i) {
        Bits committed;
        HonestSender env(&committed);
        SenderRun run = sigma_a_ideal(params, env, trial_seed(707, i));
        matched += !run.extraction_miss && run.extracted_message == committed;
        misses += run.extraction_miss;
    }
    return {matched == sessions && misses == 0,
            fmt("extracted m = committed m in %zu/%zu, extraction-miss %zu", matched, sessions, misses)};
}

Outcome mitm() {
    ExperimentReport open = preset("experiment = mitm\nn = 8\ntrials = 1000\nseed = 808");
    ExperimentReport auth = preset("experiment = mitm\nn = 8\ntrials = 1000\nseed = 808\nauth = true");
    std::size_t failures = auth.details["auth_failures"];
    bool pass = open.successes == 1000 && auth.successes == 0 && failures == 1000;
    return {pass, fmt("unauthenticated: Eve recovers %zu/1000; authenticated: Eve recovers %zu/1000, "
                      "auth-failure %zu/1000",
                      open.successes, auth.successes, failures)};
}

Outcome bad_puf_binding() {
    bool pass = true;
    std::string detail;
    for (int k = 1; k <= 4; ++k) {
        ExperimentReport r = preset(fmt("experiment = puf-variant\nn = 8\ntrials = 10000\nseed = 909\n"
                                        "puf_manufacturer = alice\npuf_simulatable = true\nflips = %d",
                                        k));
        double target = std::ldexp(1.0, -k);
        pass = pass && std::abs(r.success_rate - target) <= 0.02;
        detail += fmt("k=%d %.4f/%.4f ", k, r.success_rate, target);
    }
    return {pass, detail + "(tolerance 0.02)"};
}

Outcome transcript_privacy() {
    ProtocolParams params(8);
    const std::size_t per_group = 10000;
    const Bits m0(16);
    const Bits m1 = Bits::from_string("1011001110001101");
    // counts[group][(event, byte)][value]
    std::map<std::pair<std::size_t, std::size_t>, std::array<std::array<std::size_t, 256>, 2>> counts;
    std::set<std::size_t> lengths;
    for (int g = 0; g < 2; ++g) {
        for (std::size_t i = 0; i < per_group; ++i) {
            SessionResult s = run_honest_session(params, g ? m1 : m0, trial_seed(1010 + g, i));
            lengths.insert(s.transcript.size());
            for (std::size_t e = 0; e < s.transcript.size(); ++e) {
                const Bytes &p = s.transcript[e].payload;
                for (std::size_t b = 0; b < p.size(); ++b) ++counts[{e, b}][g][p[b]];
            }
        }
    }
    double min_p = 1.0;
    std::size_t tested = 0;
    for (auto &[key, c] : counts) {
        auto r = chi_square_homogeneity(c[0], c[1]);
        min_p = std::min(min_p, r.p_value);
        ++tested;
    }
    return {lengths.size() == 1 && min_p > 0.01,
            fmt("%zu (event, byte) positions, min p=%.4f (required > 0.01)", tested, min_p)};
}

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria = {
        {1, "soundness", 10, soundness},
        {2, "bell-model", 5, bell_model},
        {3, "concealing-bound", 5, concealing_blind},
        {4, "query-aided-concealing", 10, concealing_queries},
        {5, "binding-collisions", 10, binding_collisions},
        {6, "simulator-indistinguishability", 60, simulator_indistinguishability},
        {7, "sigma-a-extraction", 0, sigma_a_extraction},
        {8, "mitm-and-authentication", 0, mitm},
        {9, "bad-puf-binding", 0, bad_puf_binding},
        {10, "transcript-privacy", 0, transcript_privacy},
    };

    int failed = 0;
    for (const Criterion &c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.max_seconds == 0 || secs < c.max_seconds;
        bool pass = o.pass && in_time;
        failed += !pass;
        std::string limit = c.max_seconds == 0 ? "" : fmt(", limit %.0fs", c.max_seconds);
        std::printf("[%s] AC%d %s: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                    secs, limit.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
