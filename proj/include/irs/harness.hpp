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

#pragma once

#include "irs/bcd.hpp"
#include "irs/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irs {

enum class Method { bcd, fixed_phase, no_irs };

std::string to_string(Method m);
/// Accepts "bcd", "fixed-phase", "no-irs". Throws PreconditionError otherwise.
Method method_from_string(const std::string& s);

/// Recognized experiment ids.
const std::vector<std::string>& experiment_ids();

struct ExperimentSpec {
    std::string experiment = "wsr-vs-M";
    std::vector<double> sweep{50.0};
    int trials = 20;
    SystemConfig config;
    Geometry geometry;
    std::uint64_t seed_base = 1;
    std::vector<Method> methods{Method::bcd, Method::fixed_phase, Method::no_irs};
    BcdOptions solver;

    void validate() const;
};

struct TrialResult {
    std::string experiment;
    double sweep_value = 0.0;
    int sweep_index = 0;
    int trial = 0;
    Method method = Method::bcd;
    std::uint64_t seed = 0;
    bool feasible = false;
    double wsr_bits = 0.0;  // 0 when infeasible
    double q_watts = 0.0;
    int iterations = 0;
    double wall_time_s = 0.0;
    std::vector<double> trajectory;  // WSR in bits per outer iteration (BCD methods only)
    std::string diagnostic;
};

/// Config and geometry of one sweep point.
void apply_sweep_value(const std::string& experiment, double value, SystemConfig& config, Geometry& geometry);

/// Seed of the channel realization for (sweep point, trial). Shared by every method.
std::uint64_t trial_seed(std::uint64_t seed_base, int sweep_index, int trial);

SolveReport run_bcd(const ChannelSet& channels, const SystemConfig& config, const BcdOptions& options = {});

/// Removes the surface (M = 0) and runs the feasibility check and BCD.
SolveReport run_no_irs(const ChannelSet& channels, const SystemConfig& config, const BcdOptions& options = {});

/// Phases frozen at the feasibility-check output; BCD without the phase block.
SolveReport run_fixed_phase(const ChannelSet& channels, const SystemConfig& config, const BcdOptions& options = {});

/// One trial of one method. Failures are captured in the result, never thrown.
TrialResult run_trial(const ExperimentSpec& spec, int sweep_index, int trial, Method method);

/// Every (sweep point, trial, method), ordered by that key whatever the thread count.
std::vector<TrialResult> run_experiment(const ExperimentSpec& spec, int threads = 1);

struct SummaryRow {
    double sweep_value = 0.0;
    Method method = Method::bcd;
    int count = 0;
    double wsr_mean = 0.0;
    double wsr_std = 0.0;
    double q_mean = 0.0;
    double q_std = 0.0;
    double feasible_fraction = 0.0;
};

/// Mean and sample standard deviation per (sweep value, method), in first-seen order.
std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results);

enum class OutputFormat { csv, json };

struct EmitOptions {
    OutputFormat format = OutputFormat::csv;
    bool include_timing = false;  // wall times are the only non-reproducible field
};

std::string format_csv(const std::vector<TrialResult>& results, bool include_timing = false);
std::string format_json(const std::vector<TrialResult>& results, const ExperimentSpec& spec,
                        bool include_timing = false);

/// Writes the records to `path`. Throws std::runtime_error when the file cannot be written
/// and PreconditionError when there is nothing to write.
void emit_results(const std::vector<TrialResult>& results, const ExperimentSpec& spec, const std::string& path,
                  const EmitOptions& options = {});

}  // namespace irs
