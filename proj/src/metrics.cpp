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

#include "irs/metrics.hpp"

#include "irs/linalg.hpp"

#include <cmath>
#include <numbers>

namespace irs {

namespace {

void require_noise(double sigma2) {
    if (!(sigma2 > 0.0)) throw DomainError("noise power must be > 0");
}

}  // namespace

EffectiveChannels effective_channels(const ChannelSet& ch, const PhaseVector& phi, const SystemConfig& c) {
    const int m = ch.n_elements();
    if (phi.size() != m) throw PreconditionError("effective_channels: phase vector length != M");
    if (ch.h_b.size() != ch.h_r.size() || ch.g_b.size() != ch.g_r.size()) {
        throw PreconditionError("effective_channels: link count mismatch");
    }
    if (ch.g_b.size() != c.eh_weights.size()) throw PreconditionError("effective_channels: eh_weights size");

    EffectiveChannels eff;
    // diag(phi) Z, shared by every reflected link
    const CMat phi_z = phi.values.asDiagonal() * ch.z;
    for (std::size_t k = 0; k < ch.h_b.size(); ++k) {
        if (m > 0) eff.h_bar.push_back(ch.h_b[k] + ch.h_r[k] * phi_z);
        else eff.h_bar.push_back(ch.h_b[k]);
    }
    const Eigen::Index nb = ch.z.cols();
    eff.g = CMat::Zero(nb, nb);
    for (std::size_t l = 0; l < ch.g_b.size(); ++l) {
        CMat gl = (m > 0) ? CMat(ch.g_b[l] + ch.g_r[l] * phi_z) : ch.g_b[l];
        eff.g.noalias() += (c.eh_weights[l] * c.eh_efficiency) * (gl.adjoint() * gl);
        eff.g_bar.push_back(std::move(gl));
    }
    eff.g = linalg::hermitian_part(eff.g);
    return eff;
}

CMat received_covariance(const CMat& h_bar, const PrecoderSet& f, int skip) {
    CMat cov = CMat::Zero(h_bar.rows(), h_bar.rows());
    for (std::size_t m = 0; m < f.size(); ++m) {
        if (static_cast<int>(m) == skip) continue;
        const CMat hf = h_bar * f[m];
        cov.noalias() += hf * hf.adjoint();
    }
    return cov;
}

double user_rate(int k, const PrecoderSet& f, const EffectiveChannels& eff, double sigma2) {
    require_noise(sigma2);
    const auto ku = static_cast<std::size_t>(k);
    const CMat& h = eff.h_bar.at(ku);
    const Eigen::Index n = h.rows();
    const CMat j = received_covariance(h, f, k) + sigma2 * CMat::Identity(n, n);
    const CMat hf = h * f[ku];
    // log|I + L^{-1} S L^{-H}| with J = L L^H keeps the argument Hermitian PD
    Eigen::LLT<CMat> llt(linalg::hermitian_part(j));
    if (llt.info() != Eigen::Success || llt.rcond() * linalg::kMaxCondition < 1.0) {
        throw NumericalError("user_rate: interference-plus-noise covariance is ill-conditioned");
    }
    const CMat x = llt.matrixL().solve(hf);
    const CMat inner = CMat::Identity(n, n) + x * x.adjoint();
    return std::max(0.0, linalg::log_det_hpd(inner));
}

WeightedSumRate weighted_sum_rate(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& c) {
    WeightedSumRate out;
    for (std::size_t k = 0; k < eff.h_bar.size(); ++k) {
        out.nats += c.rate_weights[k] * user_rate(static_cast<int>(k), f, eff, c.noise_power_ir);
    }
    out.bits = out.nats / std::numbers::ln2;
    return out;
}

WeightedSumRate weighted_sum_rate(const PrecoderSet& f, const PhaseVector& phi, const ChannelSet& ch,
                                  const SystemConfig& c) {
    return weighted_sum_rate(f, effective_channels(ch, phi, c), c);
}

HarvestedPower harvested_power(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& c) {
    HarvestedPower out;
    for (std::size_t l = 0; l < eff.g_bar.size(); ++l) {
        double q = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) q += (eff.g_bar[l] * f[k]).squaredNorm();
        q *= c.eh_efficiency;
        out.per_er.push_back(q);
        out.weighted += c.eh_weights[l] * q;
    }
    return out;
}

double harvested_power_quadratic(const PrecoderSet& f, const CMat& g) {
    double q = 0.0;
    for (const auto& fk : f.blocks) q += linalg::real_inner(fk, g * fk);
    return q;
}

CMat mse_matrix(int k, const PrecoderSet& f, const CMat& u_k, const EffectiveChannels& eff, double sigma2) {
    const auto ku = static_cast<std::size_t>(k);
    const CMat& h = eff.h_bar.at(ku);
    const Eigen::Index d = f[ku].cols();
    const CMat uh = u_k.adjoint() * h;
    const CMat err = uh * f[ku] - CMat::Identity(d, d);
    CMat e = err * err.adjoint() + sigma2 * (u_k.adjoint() * u_k);
    for (std::size_t m = 0; m < f.size(); ++m) {
        if (m == ku) continue;
        const CMat t = uh * f[m];
        e.noalias() += t * t.adjoint();
    }
    return linalg::hermitian_part(e);
}

double wmmse_objective(const AuxState& aux, const PrecoderSet& f, const EffectiveChannels& eff,
                       const SystemConfig& c) {
    double h = 0.0;
    for (std::size_t k = 0; k < eff.h_bar.size(); ++k) {
        const CMat e = mse_matrix(static_cast<int>(k), f, aux.u[k], eff, c.noise_power_ir);
        const double logdet = linalg::log_det_hpd(aux.w[k]);
        const double tr = (aux.w[k] * e).trace().real();
        h += c.rate_weights[k] * (logdet - tr + static_cast<double>(aux.w[k].rows()));
    }
    return h;
}

double wmmse_objective(const AuxState& aux, const PrecoderSet& f, const PhaseVector& phi, const ChannelSet& ch,
                       const SystemConfig& c) {
    return wmmse_objective(aux, f, effective_channels(ch, phi, c), c);
}

}  // namespace irs
