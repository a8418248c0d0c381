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

// Random instances for the unit tests. Built directly from Gaussian draws so the
// tests do not depend on the scenario generator.

#pragma once

#include "irs/types.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace irs::test {

using Gen = std::mt19937_64;

inline CMat gaussian(Eigen::Index rows, Eigen::Index cols, Gen& g, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5) * scale);
    CMat m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cdouble(n(g), n(g));
    return m;
}

inline CVec gaussian_vec(Eigen::Index n, Gen& g, double scale = 1.0) { return gaussian(n, 1, g, scale).col(0); }

inline PhaseVector random_phases(Eigen::Index m, Gen& g) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    CVec v(m);
    for (Eigen::Index i = 0; i < m; ++i) v(i) = std::polar(1.0, u(g));
    return PhaseVector{v};
}

/// Small configuration with unit-scale channels and noise.
inline SystemConfig small_config(int nb = 3, int ni = 2, int ne = 2, int ki = 2, int ke = 2, int d = 2, int m = 4) {
    SystemConfig c;
    c.n_bs_antennas = nb;
    c.n_ir_antennas = ni;
    c.n_er_antennas = ne;
    c.n_irs = ki;
    c.n_ers = ke;
    c.n_streams = d;
    c.n_elements = m;
    c.power_budget = 1.0;
    c.eh_threshold = 0.0;
    c.noise_power_ir = 0.1;
    c.noise_power_er = 0.1;
    c.fill_default_weights();
    return c;
}

inline ChannelSet random_channels(const SystemConfig& c, Gen& g, double reflect_scale = 0.3) {
    ChannelSet ch;
    const int m = c.n_elements;
    ch.z = gaussian(m, c.n_bs_antennas, g);
    for (int k = 0; k < c.n_irs; ++k) {
        ch.h_b.push_back(gaussian(c.n_ir_antennas, c.n_bs_antennas, g));
        ch.h_r.push_back(gaussian(c.n_ir_antennas, m, g, reflect_scale));
    }
    for (int l = 0; l < c.n_ers; ++l) {
        ch.g_b.push_back(gaussian(c.n_er_antennas, c.n_bs_antennas, g));
        ch.g_r.push_back(gaussian(c.n_er_antennas, m, g, reflect_scale));
    }
    return ch;
}

inline PrecoderSet random_precoders(const SystemConfig& c, Gen& g, double power) {
    PrecoderSet f;
    for (int k = 0; k < c.n_irs; ++k) f.blocks.push_back(gaussian(c.n_bs_antennas, c.n_streams, g));
    const double s = std::sqrt(power / f.total_power());
    for (auto& b : f.blocks) b *= s;
    return f;
}

inline AuxState random_aux(const SystemConfig& c, Gen& g) {
    AuxState a;
    for (int k = 0; k < c.n_irs; ++k) {
        a.u.push_back(gaussian(c.n_ir_antennas, c.n_streams, g));
        const CMat r = gaussian(c.n_streams, c.n_streams, g);
        a.w.push_back(r * r.adjoint() + 0.5 * CMat::Identity(c.n_streams, c.n_streams));
    }
    return a;
}

/// log|a| via eigenvalues, independent of the Cholesky path in the library.
inline double logdet_eig(const CMat& a) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (a + a.adjoint()));
    return es.eigenvalues().array().log().sum();
}

}  // namespace irs::test
