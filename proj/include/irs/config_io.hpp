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
#include "irs/harness.hpp"
#include "irs/types.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace irs {

using json = nlohmann::json;

/// A single-instance input: parameters, layout and the realization seed.
struct ScenarioFile {
    SystemConfig config;
    Geometry geometry;
    std::uint64_t seed = 1;
};

// Missing keys keep their defaults; unknown keys raise PreconditionError.
json to_json(const SystemConfig& c);
json to_json(const Geometry& g);
json to_json(const BcdOptions& o);
json to_json(const ExperimentSpec& s);
json to_json(const ScenarioFile& s);
json to_json(const TrialResult& r, bool include_timing = true);
json to_json(const SolveReport& r);
json to_json(const PrecoderSet& f);
json to_json(const PhaseVector& phi);

SystemConfig system_config_from_json(const json& j);
Geometry geometry_from_json(const json& j);
BcdOptions bcd_options_from_json(const json& j);
ExperimentSpec experiment_spec_from_json(const json& j);
ScenarioFile scenario_from_json(const json& j);
TrialResult trial_result_from_json(const json& j);

/// Parses a file. Throws PreconditionError on unreadable files or malformed content.
json read_json_file(const std::string& path);

}  // namespace irs
