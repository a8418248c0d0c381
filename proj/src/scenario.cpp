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

#include "irs/scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace irs {

double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

void SystemConfig::fill_default_weights() {
    rate_weights.resize(static_cast<std::size_t>(std::max(n_irs, 0)), 1.0);
    eh_weights.resize(static_cast<std::size_t>(std::max(n_ers, 0)), 1.0);
}

void SystemConfig::validate() const {
    auto fail = [](const std::string& what) { throw PreconditionError("SystemConfig: " + what); };
    if (n_bs_antennas < 1 || n_ir_antennas < 1 || n_er_antennas < 1) fail("antenna counts must be >= 1");
    if (n_irs < 1 || n_ers < 1) fail("receiver counts must be >= 1");
    if (n_streams < 1 || n_streams > std::min(n_bs_antennas, n_ir_antennas)) {
        fail("n_streams must satisfy 1 <= d <= min(N_B, N_I)");
    }
    if (n_elements < 0) fail("n_elements must be >= 0");
    if (!(power_budget > 0.0)) fail("power_budget must be > 0");
    if (!(eh_threshold >= 0.0)) fail("eh_threshold must be >= 0");
    if (!(eh_efficiency > 0.0 && eh_efficiency <= 1.0)) fail("eh_efficiency must lie in (0, 1]");
    if (rate_weights.size() != static_cast<std::size_t>(n_irs)) fail("rate_weights size != n_irs");
    if (eh_weights.size() != static_cast<std::size_t>(n_ers)) fail("eh_weights size != n_ers");
    for (double w : rate_weights) if (!(w > 0.0)) fail("rate weights must be > 0");
    for (double a : eh_weights) if (!(a > 0.0)) fail("eh weights must be > 0");
    if (!(noise_power_ir > 0.0) || !(noise_power_er > 0.0)) fail("noise powers must be > 0");
    if (!(bandwidth > 0.0)) fail("bandwidth must be > 0");
    if (!(rician_factor >= 0.0)) fail("rician_factor must be >= 0");
    if (!(antenna_spacing_ratio > 0.0)) fail("antenna_spacing_ratio must be > 0");
}

void Geometry::validate() const {
    auto fail = [](const std::string& what) { throw PreconditionError("Geometry: " + what); };
    if (!(er_radius >= 0.0) || !(ir_radius >= 0.0)) fail("radii must be >= 0");
    if (!(d0 > 0.0)) fail("reference distance d0 must be > 0");
    for (double a : {alpha_bs_irs, alpha_irs_er, alpha_irs_ir, alpha_bs_ir, alpha_bs_er}) {
        if (!std::isfinite(a)) fail("path-loss exponents must be finite");
    }
    if (!(distance(bs_position, irs_position) > 0.0)) fail("BS and IRS coincide");
}

void ChannelSet::validate(const SystemConfig& c) const {
    auto fail = [](const std::string& what) { throw PreconditionError("ChannelSet: " + what); };
    const int m = n_elements();
    if (z.cols() != c.n_bs_antennas) fail("Z has wrong column count");
    if (h_b.size() != static_cast<std::size_t>(c.n_irs) || h_r.size() != h_b.size()) fail("IR link count");
    if (g_b.size() != static_cast<std::size_t>(c.n_ers) || g_r.size() != g_b.size()) fail("ER link count");
    auto finite = [](const CMat& a) { return a.allFinite(); };
    if (!finite(z)) fail("non-finite entry in Z");
    for (std::size_t k = 0; k < h_b.size(); ++k) {
        if (h_b[k].rows() != c.n_ir_antennas || h_b[k].cols() != c.n_bs_antennas) fail("H_b dimensions");
        if (h_r[k].rows() != c.n_ir_antennas || h_r[k].cols() != m) fail("H_r dimensions");
        if (!finite(h_b[k]) || !finite(h_r[k])) fail("non-finite IR channel entry");
    }
    for (std::size_t l = 0; l < g_b.size(); ++l) {
        if (g_b[l].rows() != c.n_er_antennas || g_b[l].cols() != c.n_bs_antennas) fail("G_b dimensions");
        if (g_r[l].rows() != c.n_er_antennas || g_r[l].cols() != m) fail("G_r dimensions");
        if (!finite(g_b[l]) || !finite(g_r[l])) fail("non-finite ER channel entry");
    }
}

ChannelSet ChannelSet::without_surface() const {
    ChannelSet out;
    out.z = CMat(0, z.cols());
    out.h_b = h_b;
    out.g_b = g_b;
    for (const auto& h : h_r) out.h_r.emplace_back(h.rows(), 0);
    for (const auto& g : g_r) out.g_r.emplace_back(g.rows(), 0);
    return out;
}

double PrecoderSet::total_power() const {
    double p = 0.0;
    for (const auto& f : blocks) p += f.squaredNorm();
    return p;
}

PrecoderSet PrecoderSet::zeros(const SystemConfig& c) {
    PrecoderSet out;
    out.blocks.assign(static_cast<std::size_t>(c.n_irs), CMat::Zero(c.n_bs_antennas, c.n_streams));
    return out;
}

PhaseVector PhaseVector::ones(int m) { return PhaseVector{CVec::Ones(m)}; }

PhaseVector PhaseVector::from_angles(const Eigen::VectorXd& theta) {
    CVec v(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i) v(i) = std::polar(1.0, theta(i));
    return PhaseVector{v};
}

double PhaseVector::modulus_error() const {
    double err = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) err = std::max(err, std::abs(std::abs(values(i)) - 1.0));
    return err;
}

// ----- Large- and small-scale models ------------------------------------------

double path_loss_linear(double distance, double exponent, double pl0_db, double d0) {
    if (!(distance > 0.0)) throw DomainError("path_loss_linear: distance must be > 0");
    if (!(d0 > 0.0)) throw DomainError("path_loss_linear: reference distance must be > 0");
    return std::pow(10.0, pl0_db / 10.0) * std::pow(distance / d0, -exponent);
}

CVec steering_vector(int n, double angle, double spacing_ratio) {
    if (n < 1) throw DomainError("steering_vector: n must be >= 1");
    CVec a(n);
    const double step = 2.0 * std::numbers::pi * spacing_ratio * std::sin(angle);
    for (int m = 0; m < n; ++m) a(m) = std::polar(1.0, step * m);
    return a;
}

CMat rayleigh_channel(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double s = 1.0 / std::numbers::sqrt2;
    CMat n(rows, cols);
    // column-major fill order is part of the determinism contract
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            n(r, c) = cdouble(s * re, s * im);
        }
    }
    return n;
}

CMat rician_channel(int rows, int cols, double beta, double aoa, double aod, Rng& rng,
                    double spacing_ratio) {
    if (!(beta >= 0.0)) throw DomainError("rician_channel: Rician factor must be >= 0");
    CMat nlos = rayleigh_channel(rows, cols, rng);
    if (rows == 0 || cols == 0) return nlos;
    const CMat los = steering_vector(rows, aoa, spacing_ratio) *
                     steering_vector(cols, aod, spacing_ratio).adjoint();
    return std::sqrt(beta / (beta + 1.0)) * los + std::sqrt(1.0 / (beta + 1.0)) * nlos;
}

Point2 sample_in_disk(const Point2& center, double radius, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double t = 2.0 * std::numbers::pi * unit(rng);
    return {center.x + r * std::cos(t), center.y + r * std::sin(t)};
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

enum class Stream : std::uint64_t { placement = 1, direct = 2, reflected = 3 };

Rng stream_rng(std::uint64_t seed, Stream s) {
    return Rng(mix_seed(mix_seed(seed) ^ static_cast<std::uint64_t>(s)));
}

}  // namespace

Realization generate_realization(const SystemConfig& c, const Geometry& geo, std::uint64_t seed) {
    c.validate();
    geo.validate();
    Realization out;
    Rng place = stream_rng(seed, Stream::placement);
    Rng direct = stream_rng(seed, Stream::direct);
    Rng reflected = stream_rng(seed, Stream::reflected);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    for (int l = 0; l < c.n_ers; ++l) out.placement.ers.push_back(sample_in_disk(geo.er_center, geo.er_radius, place));
    for (int k = 0; k < c.n_irs; ++k) out.placement.irs.push_back(sample_in_disk(geo.ir_center, geo.ir_radius, place));

    auto pl = [&](const Point2& a, const Point2& b, double alpha) {
        return std::sqrt(path_loss_linear(distance(a, b), alpha, geo.pl0_db, geo.d0));
    };
    const double beta = c.rician_factor;
    const double s = c.antenna_spacing_ratio;
    const int m = c.n_elements;
    auto& ch = out.channels;

    // Angles are drawn even for M = 0 so the stream layout does not depend on M.
    {
        const double aoa = angle(reflected);
        const double aod = angle(reflected);
        ch.z = pl(geo.bs_position, geo.irs_position, geo.alpha_bs_irs) *
               rician_channel(m, c.n_bs_antennas, beta, aoa, aod, reflected, s);
    }
    for (int l = 0; l < c.n_ers; ++l) {
        const Point2& er = out.placement.ers[static_cast<std::size_t>(l)];
        const double aoa_b = angle(direct);
        const double aod_b = angle(direct);
        ch.g_b.push_back(pl(geo.bs_position, er, geo.alpha_bs_er) *
                         rician_channel(c.n_er_antennas, c.n_bs_antennas, beta, aoa_b, aod_b, direct, s));
        const double aoa_r = angle(reflected);
        const double aod_r = angle(reflected);
        ch.g_r.push_back(pl(geo.irs_position, er, geo.alpha_irs_er) *
                         rician_channel(c.n_er_antennas, m, beta, aoa_r, aod_r, reflected, s));
    }
    for (int k = 0; k < c.n_irs; ++k) {
        const Point2& ir = out.placement.irs[static_cast<std::size_t>(k)];
        ch.h_b.push_back(pl(geo.bs_position, ir, geo.alpha_bs_ir) *
                         rayleigh_channel(c.n_ir_antennas, c.n_bs_antennas, direct));
        ch.h_r.push_back(pl(geo.irs_position, ir, geo.alpha_irs_ir) *
                         rayleigh_channel(c.n_ir_antennas, m, reflected));
    }
    return out;
}

ChannelSet generate_scenario(const SystemConfig& c, const Geometry& geo, std::uint64_t seed) {
    return generate_realization(c, geo, seed).channels;
}

}  // namespace irs
