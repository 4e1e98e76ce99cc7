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

// Experiment presets, flat key=value configuration, JSON reports and
// JSON-lines transcript files.

#ifndef QBSC_HARNESS_H
#define QBSC_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qbsc/oracle.h"
#include "qbsc/puf.h"
#include "qbsc/transcript.h"

namespace qbsc {

inline constexpr std::string_view kReportFormat = "qbsc-report/1";

enum class Experiment { Honest, SoundnessSweep, Concealing, Binding, Mitm, PufVariant, Advantage };

std::string_view experiment_name(Experiment experiment);
/// Throws InvalidParameter on an unknown name.
Experiment parse_experiment(std::string_view name);

struct ExperimentConfig {
    Experiment experiment = Experiment::Honest;
    std::size_t n = 8;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    QueryBudget budget;
    bool authenticated = false;
    std::optional<PufConfig> puf;
    /// Adds wall-clock time to the report, which then stops being reproducible.
    bool timing = false;

    /// Throws InvalidParameter on out-of-range values.
    void validate() const;
    bool operator==(const ExperimentConfig &) const;
};

/// QBSC_SEED when set and numeric, otherwise 0. Throws InvalidParameter on
/// a malformed value.
std::uint64_t default_seed();

/// Flat `key = value` lines; `#` starts a comment. Unknown keys and bad
/// values throw InvalidParameter. Starts from `base`.
ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base = {});
/// Sets one key on `config`, as parse_config_text would.
void apply_config_value(ExperimentConfig &config, std::string_view key, std::string_view value);
std::string config_to_text(const ExperimentConfig &config);
ExperimentConfig load_config_file(const std::filesystem::path &path, ExperimentConfig base = {});

struct ExperimentReport {
    ExperimentConfig config;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    /// 1.96 * sqrt(rate * (1 - rate) / trials).
    double halfwidth = 0.0;
    /// Analytic reference for the success rate, where one exists.
    std::optional<double> expected;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::optional<double> wall_clock_seconds;
};

/// Runs the experiment. When `first_transcript` is given it receives the
/// transcript of trial 0 (where the experiment produces one).
ExperimentReport run_experiment(const ExperimentConfig &config, Transcript *first_transcript = nullptr);

/// Per-trial seed: trial i of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

nlohmann::ordered_json config_to_json(const ExperimentConfig &config);
ExperimentConfig config_from_json(const nlohmann::ordered_json &j);
nlohmann::ordered_json report_to_json(const ExperimentReport &report);
/// Throws InvalidParameter when the format tag is missing or not kReportFormat.
ExperimentReport report_from_json(const nlohmann::ordered_json &j);

/// One JSON object per line: tick, direction, channel, event_kind, payload_hex.
std::string transcript_to_jsonl(const Transcript &t);
Transcript transcript_from_jsonl(std::string_view text);
/// I/O errors are thrown as std::runtime_error naming the path.
void export_transcript(const Transcript &t, const std::filesystem::path &path);
Transcript import_transcript(const std::filesystem::path &path);

}  // namespace qbsc

#endif  // QBSC_HARNESS_H
