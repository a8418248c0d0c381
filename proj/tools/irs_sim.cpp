// SPDX-License-Identifier: Apache-2.0
//
// irs-swipt: joint precoding and phase-shift design for IRS-aided SWIPT MIMO
// Copyright (C) 2026 The irs-swipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// irs_sim: command-line front end for experiments and single-instance solves.

#include "irs/bcd.hpp"
#include "irs/config_io.hpp"
#include "irs/feasibility.hpp"
#include "irs/harness.hpp"
#include "irs/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace {

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

irs::ScenarioFile load_scenario(const std::string& path, const std::optional<std::uint64_t>& seed) {
    irs::ScenarioFile s = irs::scenario_from_json(irs::read_json_file(path));
    if (seed) s.seed = *seed;
    s.config.fill_default_weights();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint precoder and IRS phase design for SWIPT MIMO downlinks"};
    app.require_subcommand(1);

    std::string input;
    std::string out_path;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool timing = false;
    std::string method = "bcd";

    auto* run = app.add_subcommand("run", "Run a Monte-Carlo experiment described by a spec file");
    run->add_option("spec-file", input, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "Override the spec's seed base");
    run->add_option("--trials", trials, "Override trials per sweep point")->check(CLI::PositiveNumber);
    run->add_option("--out", out_path, "Output file (default: stdout)");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--timing", timing, "Record wall times (output is no longer reproducible)");

    auto* check = app.add_subcommand("check-feasibility", "Check whether a scenario can meet its harvest target");
    check->add_option("scenario-file", input, "Scenario (JSON)")->required()->check(CLI::ExistingFile);
    check->add_option("--seed", seed, "Override the scenario seed");
    check->add_option("--out", out_path, "Output file (default: stdout)");

    auto* solve = app.add_subcommand("solve", "Solve one scenario and print the report");
    solve->add_option("scenario-file", input, "Scenario (JSON)")->required()->check(CLI::ExistingFile);
    solve->add_option("--seed", seed, "Override the scenario seed");
    solve->add_option("--out", out_path, "Output file (default: stdout)");
    solve->add_option("--method", method, "Method")->check(CLI::IsMember({"bcd", "fixed-phase", "no-irs"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            irs::ExperimentSpec spec = irs::experiment_spec_from_json(irs::read_json_file(input));
            if (seed) spec.seed_base = *seed;
            if (trials) spec.trials = *trials;
            spec.validate();
            const auto results = irs::run_experiment(spec, threads);
            const std::string text = format == "json" ? irs::format_json(results, spec, timing)
                                                      : irs::format_csv(results, timing);
            write_text(text, out_path);
        } else if (*check) {
            const auto s = load_scenario(input, seed);
            const auto ch = irs::generate_scenario(s.config, s.geometry, s.seed);
            const auto fr = irs::feasibility_check(ch, s.config);
            const irs::json doc{{"feasible", fr.feasible},
                                {"q_achieved", fr.q_achieved},
                                {"eh_threshold", s.config.eh_threshold},
                                {"iterations", fr.iterations},
                                {"seed", s.seed}};
            write_text(doc.dump(2) + "\n", out_path);
        } else if (*solve) {
            const auto s = load_scenario(input, seed);
            const auto ch = irs::generate_scenario(s.config, s.geometry, s.seed);
            irs::SolveReport rep;
            switch (irs::method_from_string(method)) {
                case irs::Method::bcd: rep = irs::run_bcd(ch, s.config); break;
                case irs::Method::fixed_phase: rep = irs::run_fixed_phase(ch, s.config); break;
                case irs::Method::no_irs: rep = irs::run_no_irs(ch, s.config); break;
            }
            irs::json doc = irs::to_json(rep);
            doc["seed"] = s.seed;
            doc["method"] = method;
            write_text(doc.dump(2) + "\n", out_path);
        }
    } catch (const irs::PreconditionError& e) {
        std::cerr << "irs_sim: invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "irs_sim: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
