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
#include "irs/precoder_opt.hpp"
#include "irs/types.hpp"

#include <string>
#include <vector>

namespace irs {

/// MMSE receivers U_k = (J_k + Hbar_k F_k F_k^H Hbar_k^H)^{-1} Hbar_k F_k.
std::vector<CMat> update_decoders(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& config);

/// W_k = (E_k*)^{-1} with E_k* = I - F_k^H Hbar_k^H (sum_m Hbar_k F_m F_m^H Hbar_k^H + sigma^2 I)^{-1} Hbar_k F_k.
std::vector<CMat> update_weights(const PrecoderSet& f, const std::vector<CMat>& u, const EffectiveChannels& eff,
                                 const SystemConfig& config);

/// Both updates in order.
AuxState update_aux(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& config);

/// Starting point with d streams per IR at full power P_T: each IR's top-d right singular
/// vectors, mixed with the rank-one energy beam. The smallest beam share on a grid of
/// `grid_steps` that meets Q-bar is used; the pure beam when none does.
PrecoderSet information_initializer(const EffectiveChannels& eff, const SystemConfig& config,
                                    int grid_steps = 20);

struct BcdOptions {
    double tolerance = 1e-4;  // relative WSR change
    int max_iterations = 50;
    bool optimize_phase = true;
    int max_consecutive_failures = 3;
    PrecoderSolveOptions precoder;
    PhaseSolveOptions phase;
};

struct TrajectoryPoint {
    int iteration = 0;
    double wsr_bits = 0.0;
    double power = 0.0;
    double q_watts = 0.0;
};

struct InnerStats {
    int precoder_iterations = 0;
    int phase_iterations = 0;
    bool precoder_failed = false;
    bool phase_failed = false;
};

struct SolveReport {
    std::vector<TrajectoryPoint> wsr_trajectory;  // entry 0 is the initial point
    PrecoderSet f;
    PhaseVector phi;
    bool feasible = false;
    int iterations_used = 0;
    std::vector<InnerStats> inner;
    double wall_time_s = 0.0;
    double wsr_bits = 0.0;  // 0 when infeasible
    double q_watts = 0.0;
    std::string diagnostic;
};

/// Block coordinate descent from a feasible (F, phi): precoders, phases, then decoders and weights.
/// Throws PreconditionError when the starting point violates a constraint.
SolveReport bcd_solve(const ChannelSet& channels, const SystemConfig& config, const PrecoderSet& f_init,
                      const PhaseVector& phi_init, const BcdOptions& options = {});

/// Runs the feasibility check first; an infeasible instance yields feasible = false and zero WSR.
SolveReport bcd_solve(const ChannelSet& channels, const SystemConfig& config, const BcdOptions& options = {});

}  // namespace irs
