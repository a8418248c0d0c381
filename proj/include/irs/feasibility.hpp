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

#include "irs/metrics.hpp"
#include "irs/phase_opt.hpp"
#include "irs/types.hpp"

#include <vector>

namespace irs {

struct EnergyBeam {
    PrecoderSet f;
    double q_value = 0.0;  // chi P_T
    double chi = 0.0;      // largest eigenvalue of G
    CVec direction;        // unit eigenvector b
};

/// Rank-one energy beamforming along the top eigenvector of G, power split evenly over the IRs.
EnergyBeam max_eh_precoder(const EffectiveChannels& eff, const SystemConfig& config);

/// One ascent step on T(phi): exp(j arg(g* + Upsilon phi_anchor)).
PhaseVector max_eh_phase_step(const HarvestTerms& terms, const PhaseVector& anchor);

struct FeasibilityOptions {
    int max_iterations = 200;
    double stall_tolerance = 1e-8;
    bool stop_at_threshold = true;  // false runs the alternation to its own convergence
};

struct FeasibilityResult {
    bool feasible = false;
    PrecoderSet f;
    PhaseVector phi;
    double q_achieved = 0.0;
    std::vector<double> q_trajectory;  // Q after every block update
    int iterations = 0;
};

/// Alternates energy beamforming and phase ascent from phi = 1. Feasible once Q >= Q-bar.
FeasibilityResult feasibility_check(const ChannelSet& channels, const SystemConfig& config,
                                    const FeasibilityOptions& options = {});

/// Largest weighted harvest found by the same alternation, ignoring Q-bar.
FeasibilityResult maximize_harvest(const ChannelSet& channels, const SystemConfig& config,
                                   int max_iterations = 200, double stall_tolerance = 1e-8);

}  // namespace irs
