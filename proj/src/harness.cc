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

#include "qbsc/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qbsc/attacks.h"
#include "qbsc/errors.h"
#include "qbsc/protocol.h"
#include "qbsc/simproof.h"
#include "qbsc/stats.h"

namespace qbsc {

using json = nlohmann::ordered_json;

namespace {

constexpr std::pair<Experiment, std::string_view> kExperiments[] = {
    {Experiment::Honest, "honest"},         {Experiment::SoundnessSweep, "soundness-sweep"},
    {Experiment::Concealing, "concealing"}, {Experiment::Binding, "binding"},
    {Experiment::Mitm, "mitm"},             {Experiment::PufVariant, "puf-variant"},
    {Experiment::Advantage, "advantage"},
};

// Exhaustive searches over 2^n strings are only allowed up to this size.
constexpr std::size_t kMaxExhaustiveBits = 20;

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
        throw InvalidParameter("config: " + std::string(key) + " expects a non-negative integer, got '" +
                               std::string(value) + "'");
    }
    return out;
}

std::size_t parse_budget(std::string_view key, std::string_view value) {
    if (value == "unlimited" || value == "inf") return QueryBudget::kUnlimited;
    return static_cast<std::size_t>(parse_u64(key, value));
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw InvalidParameter("config: " + std::string(key) + " expects a boolean, got '" + std::string(value) + "'");
}

std::optional<Party> parse_manufacturer(std::string_view value) {
    if (value == "none") return std::nullopt;
    if (value == "alice" || value == "A" || value == "a") return Party::Alice;
    if (value == "bob" || value == "B" || value == "b") return Party::Bob;
    throw InvalidParameter("config: puf_manufacturer expects alice, bob or none, got '" + std::string(value) + "'");
}

std::string budget_text(std::size_t b) {
    return b == QueryBudget::kUnlimited ? "unlimited" : std::to_string(b);
}

json budget_json(std::size_t b) { return b == QueryBudget::kUnlimited ? json("unlimited") : json(b); }

std::size_t budget_from_json(const json &j) {
    if (j.is_string()) return parse_budget("budget", j.get<std::string>());
    return j.get<std::size_t>();
}

double rate(std::size_t k, std::size_t n) { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }

double mean(double total, std::size_t n) { return n == 0 ? 0.0 : total / static_cast<double>(n); }

Bits trial_message(const ProtocolParams &params, std::uint64_t seed) {
    Rng rng(derive_seed(seed, Stream::Environment));
    return Bits::random(params.message_len(), rng);
}

// Probability that a scan of q distinct uniformly ordered candidates reaches
// one fixed target before any of the other 2^n - 1 strings hits c2.
double first_hit_probability(std::size_t n, std::size_t q) {
    return 1.0 - std::pow(1.0 - std::ldexp(1.0, -static_cast<int>(n)), static_cast<double>(q));
}

void run_honest(const ExperimentConfig &cfg, ExperimentReport &r, Transcript *first) {
    ProtocolParams params(cfg.n);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = trial_seed(cfg.seed, i);
        Bits m = trial_message(params, s);
        SessionResult session = run_honest_session(params, m, s);
        if (session.result.accepted() && *session.result.message == m) ++r.successes;
        if (session.failure) ++failures;
        if (i == 0 && first) *first = session.transcript;
    }
    r.trials = cfg.trials;
    r.expected = 1.0;
    r.details["failures"] = failures;
}

void run_sweep(const ExperimentConfig &cfg, ExperimentReport &r, Transcript *first) {
    std::vector<std::size_t> sizes;
    for (std::size_t n : {1, 4, 8, 16}) {
        if (n <= cfg.n) sizes.push_back(n);
    }
    if (std::find(sizes.begin(), sizes.end(), cfg.n) == sizes.end()) sizes.push_back(cfg.n);
    json per_n = json::array();
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        ProtocolParams params(sizes[idx]);
        std::size_t ok = 0;
        const std::uint64_t base = derive_seed(cfg.seed, sizes[idx]);
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            std::uint64_t s = trial_seed(base, i);
            Bits m = trial_message(params, s);
            SessionResult session = run_honest_session(params, m, s);
            if (session.result.accepted() && *session.result.message == m) ++ok;
            if (idx == 0 && i == 0 && first) *first = session.transcript;
        }
        per_n.push_back(json{{"n", sizes[idx]}, {"trials", cfg.trials}, {"successes", ok}});
        r.successes += ok;
        r.trials += cfg.trials;
    }
    r.expected = 1.0;
    r.details["per_n"] = per_n;
}

void run_concealing(const ExperimentConfig &cfg, ExperimentReport &r) {
    ProtocolParams params(cfg.n);
    std::size_t found = 0, true_found = 0;
    double queries = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        GuessOutcome g = concealing_guess_run(params, cfg.budget, trial_seed(cfg.seed, i));
        r.successes += g.success;
        found += g.basis_found;
        true_found += g.found_true_basis;
        queries += static_cast<double>(g.h2_queries);
    }
    r.trials = cfg.trials;
    const double domain = std::ldexp(1.0, static_cast<int>(cfg.n));
    const double blind = std::ldexp(1.0, -static_cast<int>(2 * cfg.n));
    const double q = std::min(static_cast<double>(cfg.budget.h2), domain);
    const double p_true = cfg.budget.h1 == 0 ? 0.0 : first_hit_probability(cfg.n, static_cast<std::size_t>(q));
    r.expected = p_true + (1.0 - p_true) * blind;
    r.details["basis_found"] = found;
    r.details["true_basis_found"] = true_found;
    r.details["mean_h2_queries"] = mean(queries, cfg.trials);
}

void run_binding(const ExperimentConfig &cfg, ExperimentReport &r) {
    ProtocolParams params(cfg.n);
    const std::size_t others = (std::size_t{1} << std::min<std::size_t>(cfg.n, 63)) - 1;
    const std::size_t budget = std::min(cfg.budget.h2, others);
    std::size_t predicted = 0;
    double queries = 0, flipped = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        ForgeOutcome f = binding_forge_run(params, budget, trial_seed(cfg.seed, i));
        r.successes += f.success;
        predicted += f.prediction_hit;
        queries += static_cast<double>(f.search_queries);
        flipped += static_cast<double>(f.flipped);
    }
    r.trials = cfg.trials;
    r.expected = first_hit_probability(cfg.n, budget);
    r.details["search_budget"] = budget_json(budget);
    r.details["prediction_hits"] = predicted;
    r.details["mean_search_queries"] = mean(queries, cfg.trials);
    r.details["mean_flipped_on_success"] = mean(flipped, r.successes);
}

void run_mitm(const ExperimentConfig &cfg, ExperimentReport &r, Transcript *first) {
    ProtocolParams params(cfg.n);
    std::size_t auth_failures = 0, accepts = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = trial_seed(cfg.seed, i);
        Bits m = trial_message(params, s);
        if (i == 0 && first) {
            auto eve = std::make_shared<MitmEve>();
            ChannelConfig channel{cfg.authenticated, eve};
            *first = run_channel_session(params, m, channel, s).transcript;
        }
        MitmOutcome o = mitm_eve_run(params, m, cfg.authenticated, s);
        r.successes += o.eve_message == m;
        auth_failures += o.auth_failure;
        accepts += o.receiver_output.accepted();
    }
    r.trials = cfg.trials;
    r.expected = cfg.authenticated ? 0.0 : 1.0;
    r.details["auth_failures"] = auth_failures;
    r.details["receiver_accepts"] = accepts;
}

void run_puf(const ExperimentConfig &cfg, ExperimentReport &r, Transcript *first) {
    ProtocolParams params(cfg.n);
    const PufConfig puf = cfg.puf.value_or(PufConfig{});
    std::size_t accepted = 0, forged = 0, basis_early = 0, message_early = 0, planted = 0;
    double h1_log = 0, h2_log = 0, simulations = 0, prior = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = trial_seed(cfg.seed, i);
        PufVariantRun v = run_puf_protocol_variant(params, trial_message(params, s), puf, s);
        accepted += v.accepted;
        forged += v.forged_accept;
        basis_early += v.leakage.basis_learned_before_open;
        message_early += v.leakage.message_learned_before_open;
        planted += v.leakage.planted;
        h1_log += static_cast<double>(v.leakage.h1_log.size());
        h2_log += static_cast<double>(v.leakage.h2_log.size());
        simulations += static_cast<double>(v.leakage.simulation_queries);
        prior += static_cast<double>(v.leakage.prior_session_entries);
        if (i == 0 && first) *first = v.transcript;
    }
    r.trials = cfg.trials;
    if (puf.flips) {
        r.successes = forged;
        r.expected = std::ldexp(1.0, -static_cast<int>(*puf.flips));
    } else {
        r.successes = accepted;
        r.expected = 1.0;
    }
    r.details["accepted"] = accepted;
    r.details["forged_accepts"] = forged;
    r.details["planted"] = planted;
    r.details["basis_learned_before_open"] = basis_early;
    r.details["message_learned_before_open"] = message_early;
    r.details["mean_h1_log"] = mean(h1_log, cfg.trials);
    r.details["mean_h2_log"] = mean(h2_log, cfg.trials);
    r.details["mean_simulation_queries"] = mean(simulations, cfg.trials);
    r.details["mean_prior_session_entries"] = mean(prior, cfg.trials);
}

void run_advantage(const ExperimentConfig &cfg, ExperimentReport &r) {
    ProtocolParams params(cfg.n);
    json envs = json::array();
    for (const Distinguisher &d : shipped_distinguishers(params)) {
        AdvantageEstimate e = estimate_advantage(d.real, d.ideal, cfg.trials, cfg.seed);
        envs.push_back(json{{"name", d.name},
                            {"condition", d.condition},
                            {"p_real", e.p_real},
                            {"p_ideal", e.p_ideal},
                            {"advantage", e.advantage},
                            {"halfwidth", e.halfwidth},
                            {"within_noise", e.within_noise()}});
        r.successes += e.within_noise();
        ++r.trials;
    }
    r.expected = 1.0;
    r.details["trials_per_world"] = cfg.trials;
    r.details["environments"] = envs;
}

}  // namespace

std::string_view experiment_name(Experiment experiment) {
    for (auto [e, name] : kExperiments) {
        if (e == experiment) return name;
    }
    return "unknown";
}

Experiment parse_experiment(std::string_view name) {
    for (auto [e, n] : kExperiments) {
        if (n == name) return e;
    }
    throw InvalidParameter("unknown experiment '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    if (n == 0) throw InvalidParameter("n must be positive");
    if (n > 63) throw InvalidParameter("n must be at most 63");
    if (trials == 0) throw InvalidParameter("trials must be positive");
    if (experiment == Experiment::Advantage && trials < 100) {
        throw InvalidParameter("advantage needs at least 100 trials");
    }
    const bool exhaustive = budget.h2 == QueryBudget::kUnlimited;
    if ((experiment == Experiment::Concealing || experiment == Experiment::Binding) && exhaustive &&
        n > kMaxExhaustiveBits) {
        throw InvalidParameter("an unlimited H2 budget needs n <= 20");
    }
    if (experiment == Experiment::PufVariant && puf && puf->flips) {
        if (puf->manufacturer != Party::Alice || !puf->simulatable) {
            throw InvalidParameter("flips requires puf_manufacturer=alice and puf_simulatable=true");
        }
        if (*puf->flips == 0 || *puf->flips > n) throw InvalidParameter("flips must be in [1, n]");
    }
}

bool ExperimentConfig::operator==(const ExperimentConfig &o) const {
    return config_to_text(*this) == config_to_text(o);
}

std::uint64_t default_seed() {
    const char *env = std::getenv("QBSC_SEED");
    if (env == nullptr || *env == '\0') return 0;
    return parse_u64("QBSC_SEED", env);
}

void apply_config_value(ExperimentConfig &c, std::string_view key, std::string_view value) {
    auto puf = [&]() -> PufConfig & {
        if (!c.puf) c.puf.emplace();
        return *c.puf;
    };
    if (key == "experiment") {
        c.experiment = parse_experiment(value);
    } else if (key == "n") {
        c.n = parse_u64(key, value);
    } else if (key == "trials") {
        c.trials = parse_u64(key, value);
    } else if (key == "seed") {
        c.seed = parse_u64(key, value);
    } else if (key == "q_h1") {
        c.budget.h1 = parse_budget(key, value);
    } else if (key == "q_h2") {
        c.budget.h2 = parse_budget(key, value);
    } else if (key == "auth") {
        c.authenticated = parse_bool(key, value);
    } else if (key == "timing") {
        c.timing = parse_bool(key, value);
    } else if (key == "puf_manufacturer") {
        puf().manufacturer = parse_manufacturer(value);
    } else if (key == "puf_simulatable") {
        puf().simulatable = parse_bool(key, value);
    } else if (key == "puf_logging") {
        puf().logging = parse_bool(key, value);
    } else if (key == "puf_access_before_open") {
        puf().access_before_open = parse_bool(key, value);
    } else if (key == "puf_send_message") {
        puf().send_message = parse_bool(key, value);
    } else if (key == "puf_reuse") {
        puf().reuse_devices = parse_bool(key, value);
    } else if (key == "flips") {
        if (value == "none") {
            puf().flips.reset();
        } else {
            puf().flips = parse_u64(key, value);
        }
    } else {
        throw InvalidParameter("config: unknown key '" + std::string(key) + "'");
    }
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw InvalidParameter("config line " + std::to_string(lineno) + ": expected key = value");
        }
        apply_config_value(base, trim(std::string_view(stripped).substr(0, eq)),
                           trim(std::string_view(stripped).substr(eq + 1)));
    }
    return base;
}

std::string config_to_text(const ExperimentConfig &c) {
    std::ostringstream out;
    out << "experiment = " << experiment_name(c.experiment) << "\n"
        << "n = " << c.n << "\n"
        << "trials = " << c.trials << "\n"
        << "seed = " << c.seed << "\n"
        << "q_h1 = " << budget_text(c.budget.h1) << "\n"
        << "q_h2 = " << budget_text(c.budget.h2) << "\n"
        << "auth = " << (c.authenticated ? "true" : "false") << "\n"
        << "timing = " << (c.timing ? "true" : "false") << "\n";
    if (c.puf) {
        const PufConfig &p = *c.puf;
        out << "puf_manufacturer = " << (p.manufacturer ? party_name(*p.manufacturer) : "none") << "\n"
            << "puf_simulatable = " << (p.simulatable ? "true" : "false") << "\n"
            << "puf_logging = " << (p.logging ? "true" : "false") << "\n"
            << "puf_access_before_open = " << (p.access_before_open ? "true" : "false") << "\n"
            << "puf_send_message = " << (p.send_message ? "true" : "false") << "\n"
            << "puf_reuse = " << (p.reuse_devices ? "true" : "false") << "\n"
            << "flips = " << (p.flips ? std::to_string(*p.flips) : "none") << "\n";
    }
    return out.str();
}

ExperimentConfig load_config_file(const std::filesystem::path &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), std::move(base));
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    return derive_seed(derive_seed(seed, Stream::Trial), static_cast<std::uint64_t>(trial));
}

ExperimentReport run_experiment(const ExperimentConfig &config, Transcript *first_transcript) {
    config.validate();
    ExperimentReport r;
    r.config = config;
    const auto start = std::chrono::steady_clock::now();
    switch (config.experiment) {
        case Experiment::Honest:
            run_honest(config, r, first_transcript);
            break;
        case Experiment::SoundnessSweep:
            run_sweep(config, r, first_transcript);
            break;
        case Experiment::Concealing:
            run_concealing(config, r);
            break;
        case Experiment::Binding:
            run_binding(config, r);
            break;
        case Experiment::Mitm:
            run_mitm(config, r, first_transcript);
            break;
        case Experiment::PufVariant:
            run_puf(config, r, first_transcript);
            break;
        case Experiment::Advantage:
            run_advantage(config, r);
            break;
    }
    r.success_rate = rate(r.successes, r.trials);
    r.halfwidth = 1.96 * binomial_sigma(r.success_rate, r.trials);
    if (config.timing) {
        r.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

json config_to_json(const ExperimentConfig &c) {
    json j{{"experiment", experiment_name(c.experiment)},
           {"n", c.n},
           {"trials", c.trials},
           {"seed", c.seed},
           {"q_h1", budget_json(c.budget.h1)},
           {"q_h2", budget_json(c.budget.h2)},
           {"auth", c.authenticated}};
    if (c.puf) {
        const PufConfig &p = *c.puf;
        j["puf"] = json{{"manufacturer", p.manufacturer ? json(party_name(*p.manufacturer)) : json(nullptr)},
                        {"simulatable", p.simulatable},
                        {"logging", p.logging},
                        {"access_before_open", p.access_before_open},
                        {"send_message", p.send_message},
                        {"reuse", p.reuse_devices},
                        {"flips", p.flips ? json(*p.flips) : json(nullptr)}};
    } else {
        j["puf"] = nullptr;
    }
    return j;
}

ExperimentConfig config_from_json(const json &j) {
    ExperimentConfig c;
    c.experiment = parse_experiment(j.at("experiment").get<std::string>());
    c.n = j.at("n").get<std::size_t>();
    c.trials = j.at("trials").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.budget.h1 = budget_from_json(j.at("q_h1"));
    c.budget.h2 = budget_from_json(j.at("q_h2"));
    c.authenticated = j.at("auth").get<bool>();
    if (const json &p = j.at("puf"); !p.is_null()) {
        PufConfig puf;
        if (!p.at("manufacturer").is_null()) puf.manufacturer = parse_manufacturer(p.at("manufacturer").get<std::string>());
        puf.simulatable = p.at("simulatable").get<bool>();
        puf.logging = p.at("logging").get<bool>();
        puf.access_before_open = p.at("access_before_open").get<bool>();
        puf.send_message = p.at("send_message").get<bool>();
        puf.reuse_devices = p.at("reuse").get<bool>();
        if (!p.at("flips").is_null()) puf.flips = p.at("flips").get<std::size_t>();
        c.puf = puf;
    }
    return c;
}

json report_to_json(const ExperimentReport &r) {
    json j{{"format", kReportFormat}, {"config", config_to_json(r.config)}};
    j["aggregate"] = json{{"trials", r.trials},
                          {"successes", r.successes},
                          {"success_rate", r.success_rate},
                          {"halfwidth", r.halfwidth},
                          {"expected", r.expected ? json(*r.expected) : json(nullptr)}};
    j["details"] = r.details;
    if (r.wall_clock_seconds) j["wall_clock_seconds"] = *r.wall_clock_seconds;
    return j;
}

ExperimentReport report_from_json(const json &j) {
    if (!j.is_object() || !j.contains("format")) throw InvalidParameter("report: missing format tag");
    const std::string format = j.at("format").get<std::string>();
    if (format != kReportFormat) throw InvalidParameter("report: unsupported format '" + format + "'");
    ExperimentReport r;
    r.config = config_from_json(j.at("config"));
    const json &a = j.at("aggregate");
    r.trials = a.at("trials").get<std::size_t>();
    r.successes = a.at("successes").get<std::size_t>();
    r.success_rate = a.at("success_rate").get<double>();
    r.halfwidth = a.at("halfwidth").get<double>();
    if (!a.at("expected").is_null()) r.expected = a.at("expected").get<double>();
    r.details = j.at("details");
    if (j.contains("wall_clock_seconds")) {
        r.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
        r.config.timing = true;
    }
    return r;
}

std::string transcript_to_jsonl(const Transcript &t) {
    std::string out;
    for (const Event &e : t.events()) {
        json line{{"tick", e.tick},
                  {"direction", e.direction},
                  {"channel", channel_name(e.channel)},
                  {"event_kind", e.kind},
                  {"payload_hex", to_hex(e.payload)}};
        out += line.dump();
        out += '\n';
    }
    return out;
}

Transcript transcript_from_jsonl(std::string_view text) {
    std::vector<Event> events;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (trim(line).empty()) continue;
        json j = json::parse(line);
        Event e;
        e.tick = j.at("tick").get<std::uint64_t>();
        e.direction = j.at("direction").get<std::string>();
        e.channel = parse_channel(j.at("channel").get<std::string>());
        e.kind = j.at("event_kind").get<std::string>();
        e.payload = from_hex(j.at("payload_hex").get<std::string>());
        events.push_back(std::move(e));
    }
    return Transcript::from_events(std::move(events));
}

void export_transcript(const Transcript &t, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write transcript to " + path.string());
    out << transcript_to_jsonl(t);
    if (!out) throw std::runtime_error("error while writing transcript to " + path.string());
}

Transcript import_transcript(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read transcript from " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return transcript_from_jsonl(text.str());
    } catch (const std::exception &e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace qbsc
