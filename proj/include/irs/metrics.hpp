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

#include "irs/types.hpp"

#include <vector>

namespace irs {

/// Composite channels for a fixed phase vector.
struct EffectiveChannels {
    std::vector<CMat> h_bar;  // N_I x N_B, H_b + H_r diag(phi) Z
    std::vector<CMat> g_bar;  // N_E x N_B, G_b + G_r diag(phi) Z
    CMat g;                   // N_B x N_B, sum_l alpha_l eta Gbar_l^H Gbar_l
};

EffectiveChannels effective_channels(const ChannelSet& channels, const PhaseVector& phi,
                                     const SystemConfig& config);

/// Received covariance at IR k: sum over streams in `users` of Hbar_k F_m F_m^H Hbar_k^H.
/// `skip` excludes one user (pass -1 to include all).
CMat received_covariance(const CMat& h_bar, const PrecoderSet& f, int skip = -1);

/// Rate of IR k in nats: log|I + Hbar F_k F_k^H Hbar^H J_k^{-1}|.
double user_rate(int k, const PrecoderSet& f, const EffectiveChannels& eff, double noise_power);

struct WeightedSumRate {
    double nats = 0.0;
    double bits = 0.0;
};

WeightedSumRate weighted_sum_rate(const PrecoderSet& f, const EffectiveChannels& eff,
                                  const SystemConfig& config);
WeightedSumRate weighted_sum_rate(const PrecoderSet& f, const PhaseVector& phi,
                                  const ChannelSet& channels, const SystemConfig& config);

struct HarvestedPower {
    std::vector<double> per_er;  // Q_l
    double weighted = 0.0;       // Q = sum_l alpha_l Q_l
};

HarvestedPower harvested_power(const PrecoderSet& f, const EffectiveChannels& eff,
                               const SystemConfig& config);

/// tr(sum_k F_k^H G F_k); equals HarvestedPower::weighted.
double harvested_power_quadratic(const PrecoderSet& f, const CMat& g);

/// MSE matrix of IR k for decoder u_k.
CMat mse_matrix(int k, const PrecoderSet& f, const CMat& u_k, const EffectiveChannels& eff,
                double noise_power);

/// sum_k omega_k (log|W_k| - tr(W_k E_k) + d). Throws DomainError if some W_k is not PD.
double wmmse_objective(const AuxState& aux, const PrecoderSet& f, const EffectiveChannels& eff,
                       const SystemConfig& config);
double wmmse_objective(const AuxState& aux, const PrecoderSet& f, const PhaseVector& phi,
                       const ChannelSet& channels, const SystemConfig& config);

}  // namespace irs
