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

#include "irs/bcd.hpp"

#include "irs/feasibility.hpp"
#include "irs/linalg.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace irs {

namespace {

CMat interference_plus_signal(int k, const PrecoderSet& f, const EffectiveChannels& eff, double noise) {
    const CMat& h = eff.h_bar[k];
    CMat j = received_covariance(h, f);
    j.diagonal().array() += noise;
    return linalg::hermitian_part(j);
}

}  // namespace

std::vector<CMat> update_decoders(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& c) {
    if (!(c.noise_power_ir > 0.0)) throw DomainError("update_decoders: noise power must be positive");
    std::vector<CMat> u;
    u.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const CMat total = interference_plus_signal(static_cast<int>(k), f, eff, c.noise_power_ir);
        u.push_back(linalg::solve_hpd(total, eff.h_bar[k] * f[k], std::numeric_limits<double>::infinity()));
    }
    return u;
}

std::vector<CMat> update_weights(const PrecoderSet& f, const std::vector<CMat>& u, const EffectiveChannels& eff,
                                 const SystemConfig&) {
    std::vector<CMat> w;
    w.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const CMat hf = eff.h_bar[k] * f[k];
        // with the MMSE receiver, E* = I - F^H Hbar^H U
        CMat e = CMat::Identity(f[k].cols(), f[k].cols()) - hf.adjoint() * u[k];
        e = linalg::hermitian_part(e);
        try {
            w.push_back(linalg::inverse_hpd(e, std::numeric_limits<double>::infinity()));
        } catch (const NumericalError& err) {
            throw NumericalError(std::string("update_weights: singular MMSE matrix: ") + err.what());
        }
    }
    return w;
}

AuxState update_aux(const PrecoderSet& f, const EffectiveChannels& eff, const SystemConfig& c) {
    AuxState aux;
    aux.u = update_decoders(f, eff, c);
    aux.w = update_weights(f, aux.u, eff, c);
    return aux;
}

PrecoderSet information_initializer(const EffectiveChannels& eff, const SystemConfig& c, int grid_steps) {
    auto [chi, b] = linalg::max_eigenpair(eff.g);
    (void)chi;
    const Eigen::Index nb = eff.g.rows();
    PrecoderSet beam = PrecoderSet::zeros(c);
    PrecoderSet info = PrecoderSet::zeros(c);
    for (std::size_t k = 0; k < info.size(); ++k) {
        beam[k].col(0) = b;
        Eigen::JacobiSVD<CMat> svd(eff.h_bar[k], Eigen::ComputeFullV);
        const Eigen::Index cols = std::min<Eigen::Index>(info[k].cols(), nb);
        info[k].leftCols(cols) = svd.matrixV().leftCols(cols);
    }

    auto normalized = [&](double t) {
        PrecoderSet f = PrecoderSet::zeros(c);
        for (std::size_t k = 0; k < f.size(); ++k) f[k] = std::sqrt(1.0 - t) * info[k] + std::sqrt(t) * beam[k];
        const double p = f.total_power();
        if (p > 0.0)
            for (auto& blk : f.blocks) blk *= std::sqrt(c.power_budget / p);
        return f;
    };
    // smallest beam share on the grid that clears Q-bar with a little margin
    const double target = c.eh_threshold > 0.0 ? c.eh_threshold * (1.0 + 1e-3) : 0.0;
    for (int i = 0; i < grid_steps; ++i) {
        PrecoderSet f = normalized(static_cast<double>(i) / grid_steps);
        if (f.total_power() > 0.0 && harvested_power_quadratic(f, eff.g) >= target) return f;
    }
    return normalized(1.0);
}

SolveReport bcd_solve(const ChannelSet& ch, const SystemConfig& c, const PrecoderSet& f_init,
                      const PhaseVector& phi_init, const BcdOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    ch.validate(c);
    if (f_init.size() != static_cast<std::size_t>(c.n_irs)) throw PreconditionError("bcd_solve: wrong precoder count");
    if (phi_init.size() != ch.n_elements()) throw PreconditionError("bcd_solve: phase vector length != M");

    SolveReport rep;
    PrecoderSet f = f_init;
    PhaseVector phi = phi_init;
    EffectiveChannels eff = effective_channels(ch, phi, c);

    const double q0 = harvested_power_quadratic(f, eff.g);
    if (f.total_power() > c.power_budget * (1.0 + kFeasibilitySlack) ||
        q0 < c.eh_threshold * (1.0 - kFeasibilitySlack)) {
        throw PreconditionError("bcd_solve: initial point violates the power or harvesting constraint");
    }

    AuxState aux = update_aux(f, eff, c);
    double rate = weighted_sum_rate(f, eff, c).nats;
    rep.wsr_trajectory.push_back({0, rate / std::log(2.0), f.total_power(), q0});

    int consecutive_failures = 0;
    for (int n = 1; n <= opt.max_iterations; ++n) {
        InnerStats stats;
        try {
            auto pre = sca_precoder_solve(aux, eff, f, c, opt.precoder);
            f = std::move(pre.f);
            stats.precoder_iterations = pre.iterations;
        } catch (const SubproblemInfeasible& e) {
            stats.precoder_failed = true;
            rep.diagnostic = e.what();
        } catch (const NumericalError& e) {
            stats.precoder_failed = true;
            rep.diagnostic = e.what();
        }

        if (opt.optimize_phase && ch.n_elements() > 0) {
            try {
                auto ph = phase_solve(aux, f, ch, phi, c, opt.phase);
                phi = std::move(ph.phi);
                stats.phase_iterations = ph.iterations;
            } catch (const SubproblemInfeasible& e) {
                stats.phase_failed = true;
                rep.diagnostic = e.what();
            } catch (const NumericalError& e) {
                stats.phase_failed = true;
                rep.diagnostic = e.what();
            }
            eff = effective_channels(ch, phi, c);
        }

        aux = update_aux(f, eff, c);
        const double rate_new = weighted_sum_rate(f, eff, c).nats;
        rep.wsr_trajectory.push_back(
            {n, rate_new / std::log(2.0), f.total_power(), harvested_power_quadratic(f, eff.g)});
        rep.inner.push_back(stats);
        rep.iterations_used = n;

        if (stats.precoder_failed || stats.phase_failed) {
            if (++consecutive_failures >= opt.max_consecutive_failures) {
                rep.diagnostic = "aborted after repeated subproblem failures: " + rep.diagnostic;
                rate = rate_new;
                break;
            }
        } else {
            consecutive_failures = 0;
        }

        const double denom = std::max(std::abs(rate_new), std::numeric_limits<double>::min());
        const bool done = std::abs(rate_new - rate) / denom < opt.tolerance;
        rate = rate_new;
        if (done) break;
    }

    rep.f = std::move(f);
    rep.phi = std::move(phi);
    rep.feasible = true;
    rep.wsr_bits = rate / std::log(2.0);
    rep.q_watts = rep.wsr_trajectory.back().q_watts;
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

SolveReport bcd_solve(const ChannelSet& ch, const SystemConfig& c, const BcdOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const FeasibilityResult fr = feasibility_check(ch, c);
    if (!fr.feasible) {
        SolveReport rep;
        rep.f = fr.f;
        rep.phi = fr.phi;
        rep.q_watts = fr.q_achieved;
        rep.diagnostic = "harvesting threshold not reachable";
        rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    const PrecoderSet f0 = information_initializer(effective_channels(ch, fr.phi, c), c);
    SolveReport rep = bcd_solve(ch, c, f0, fr.phi, opt);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace irs
