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

// qbsc run <experiment> [options]
//
// Prints a JSON report on stdout. Exit status: 0 on completion, 2 on a
// configuration error, 3 on an I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbsc/errors.h"
#include "qbsc/harness.h"

namespace {

constexpr int kConfigError = 2;
constexpr int kIoError = 3;

struct Overrides {
    std::string experiment;
    std::optional<std::string> n, trials, seed, q_h1, q_h2, flips, manufacturer;
    std::optional<std::string> logging, simulatable, access_before_open, send_message, reuse;
    bool auth = false;
    bool timing = false;
    std::string config_path;
    std::string out_path;
    std::string transcript_path;
};

qbsc::ExperimentConfig build_config(const Overrides &o) {
    qbsc::ExperimentConfig config;
    config.seed = qbsc::default_seed();
    if (!o.config_path.empty()) config = qbsc::load_config_file(o.config_path, config);
    qbsc::apply_config_value(config, "experiment", o.experiment);
    auto set = [&](const char *key, const std::optional<std::string> &value) {
        if (value) qbsc::apply_config_value(config, key, *value);
    };
    set("n", o.n);
    set("trials", o.trials);
    set("seed", o.seed);
    set("q_h1", o.q_h1);
    set("q_h2", o.q_h2);
    set("puf_manufacturer", o.manufacturer);
    set("puf_logging", o.logging);
    set("puf_simulatable", o.simulatable);
    set("puf_access_before_open", o.access_before_open);
    set("puf_send_message", o.send_message);
    set("puf_reuse", o.reuse);
    set("flips", o.flips);
    if (o.auth) config.authenticated = true;
    if (o.timing) config.timing = true;
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Private quantum bit-string commitment lab"};
    app.require_subcommand(1);

    Overrides o;
    CLI::App *run = app.add_subcommand("run", "Run an experiment and print its report");
    run->add_option("experiment", o.experiment,
                    "honest | soundness-sweep | concealing | binding | mitm | puf-variant | advantage")
        ->required();
    run->add_option("--n", o.n, "Number of EPR pairs");
    run->add_option("--trials", o.trials, "Number of trials");
    run->add_option("--seed", o.seed, "64-bit seed (default: $QBSC_SEED, else 0)");
    run->add_option("--q-h1", o.q_h1, "Adversary H1 query budget (integer or 'unlimited')");
    run->add_option("--q-h2", o.q_h2, "Adversary H2 query budget (integer or 'unlimited')");
    run->add_flag("--auth", o.auth, "Authenticated classical channel");
    run->add_option("--puf-manufacturer", o.manufacturer, "alice | bob | none");
    run->add_option("--puf-logging", o.logging, "Challenge-logging devices (true/false)")
        ->expected(0, 1)
        ->default_str("true");
    run->add_option("--puf-simulatable", o.simulatable, "Simulatable devices (true/false)")
        ->expected(0, 1)
        ->default_str("true");
    run->add_option("--puf-access-before-open", o.access_before_open, "Manufacturer back door before opening");
    run->add_option("--puf-send-message", o.send_message, "Send the claimed message at opening");
    run->add_option("--puf-reuse", o.reuse, "Reuse devices from an earlier session");
    run->add_option("--flips", o.flips, "Bases flipped by Alice's planted second preimage");
    run->add_option("--config", o.config_path, "Flat key = value config file; flags override it");
    run->add_option("--out", o.out_path, "Also write the report to this file");
    run->add_option("--transcript", o.transcript_path, "Write the first trial's transcript (JSON lines)");
    run->add_flag("--timing", o.timing, "Include wall-clock time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    qbsc::ExperimentReport report;
    qbsc::Transcript transcript;
    try {
        qbsc::ExperimentConfig config = build_config(o);
        report = qbsc::run_experiment(config, o.transcript_path.empty() ? nullptr : &transcript);
    } catch (const qbsc::InvalidParameter &e) {
        std::cerr << "qbsc: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::runtime_error &e) {
        std::cerr << "qbsc: " << e.what() << "\n";
        return kConfigError;
    }

    const std::string text = qbsc::report_to_json(report).dump(2) + "\n";
    std::cout << text;
    try {
        if (!o.out_path.empty()) {
            std::ofstream out(o.out_path, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write report to " + o.out_path);
            out << text;
            if (!out) throw std::runtime_error("error while writing report to " + o.out_path);
        }
        if (!o.transcript_path.empty()) qbsc::export_transcript(transcript, o.transcript_path);
    } catch (const std::exception &e) {
        std::cerr << "qbsc: " << e.what() << "\n";
        return kIoError;
    }
    return 0;
}
