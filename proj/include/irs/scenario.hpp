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

#include <cstdint>
#include <random>
#include <vector>

namespace irs {

using Rng = std::mt19937_64;

/// Linear power gain 10^(PL0/10) (D/D0)^(-alpha). Throws DomainError for non-positive distances.
double path_loss_linear(double distance, double exponent, double pl0_db, double d0);

/// Uniform linear array response; entry m is exp(j 2 pi s m sin(angle)).
CVec steering_vector(int n, double angle, double spacing_ratio);

/// n_rows x n_cols matrix of i.i.d. CN(0, 1) entries.
CMat rayleigh_channel(int rows, int cols, Rng& rng);

/// sqrt(beta/(beta+1)) a_rows(aoa) a_cols(aod)^H + sqrt(1/(beta+1)) N with N ~ CN(0, 1) i.i.d.
/// Unit average entry power for every beta. Throws DomainError for beta < 0.
CMat rician_channel(int rows, int cols, double beta, double aoa, double aod, Rng& rng,
                    double spacing_ratio = 0.5);

/// Node positions of one realization.
struct Placement {
    std::vector<Point2> ers;
    std::vector<Point2> irs;  // information receivers
};

struct Realization {
    Placement placement;
    ChannelSet channels;
};

/// Uniform point in a disk (area-uniform radius).
Point2 sample_in_disk(const Point2& center, double radius, Rng& rng);

/// Draws node positions and all small-scale fading, then applies path loss per link.
/// Direct links (BS-IR, IRS-IR) are Rayleigh; links near the BS/IRS/ER cluster (BS-IRS,
/// IRS-ER, BS-ER) are Rician. Positions, direct links and reflected links use separate
/// random streams, so changing M leaves the direct channels of a seed untouched.
Realization generate_realization(const SystemConfig& config, const Geometry& geometry,
                                 std::uint64_t seed);

ChannelSet generate_scenario(const SystemConfig& config, const Geometry& geometry,
                             std::uint64_t seed);

/// splitmix64 finalizer; stable across platforms.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace irs
