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

#include "irs/precoder_opt.hpp"

#include "irs/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <optional>

namespace irs {

QuadraticData build_quadratic(const AuxState& aux, const EffectiveChannels& eff, const PrecoderSet& anchor,
                              const SystemConfig& c) {
    const auto n_users = eff.h_bar.size();
    if (aux.u.size() != n_users || aux.w.size() != n_users || anchor.size() != n_users) {
        throw PreconditionError("build_quadratic: user count mismatch");
    }
    QuadraticData data;
    const Eigen::Index nb = eff.g.rows();
    data.a = CMat::Zero(nb, nb);
    for (std::size_t k = 0; k < n_users; ++k) {
        const CMat hu = eff.h_bar[k].adjoint() * aux.u[k];  // N_B x d
        data.a.noalias() += c.rate_weights[k] * (hu * aux.w[k] * hu.adjoint());
        data.linear.push_back(c.rate_weights[k] * (hu * aux.w[k]));
    }
    data.a = linalg::hermitian_part(data.a);
    data.g = eff.g;
    data.anchor = anchor;
    double q_anchor = 0.0;
    for (std::size_t k = 0; k < n_users; ++k) {
        data.g_anchor.push_back(eff.g * anchor[k]);
        q_anchor += linalg::real_inner(anchor[k], data.g_anchor.back());
    }
    data.q_tilde = c.eh_threshold + q_anchor;
    data.harvest_active = c.eh_threshold > 0.0;

    Eigen::SelfAdjointEigenSolver<CMat> es(data.a);
    if (es.info() != Eigen::Success) throw NumericalError("build_quadratic: eigensolver failed");
    data.eig.basis = es.eigenvectors();
    data.eig.values = es.eigenvalues().cwiseMax(0.0);
    return data;
}

CMat apply_shifted_pinv(const EigenCache& eig, double lambda, const CMat& rhs) {
    const double top = eig.values.size() ? eig.values.maxCoeff() : 0.0;
    const double tol = 1e-12 * top;
    Eigen::VectorXd inv(eig.values.size());
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
        const double s = lambda + eig.values(i);
        inv(i) = (s > tol && s > 0.0) ? 1.0 / s : 0.0;
    }
    return eig.basis * (inv.asDiagonal() * (eig.basis.adjoint() * rhs));
}

PrecoderSet precoder_closed_form(double lambda, double mu, const QuadraticData& data) {
    PrecoderSet out;
    out.blocks.reserve(data.linear.size());
    for (std::size_t k = 0; k < data.linear.size(); ++k) {
        CMat rhs = data.linear[k];
        if (mu != 0.0) rhs += mu * data.g_anchor[k];
        out.blocks.push_back(apply_shifted_pinv(data.eig, lambda, rhs));
    }
    return out;
}

double linearized_harvest(const PrecoderSet& f, const QuadraticData& data) {
    double acc = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) acc += linalg::real_inner(data.g_anchor[k], f[k]);
    return 2.0 * acc;
}

double compute_mu(double lambda, const QuadraticData& data) {
    if (!data.harvest_active) return 0.0;
    const PrecoderSet f0 = precoder_closed_form(lambda, 0.0, data);
    const double lin0 = linearized_harvest(f0, data);
    if (lin0 >= data.q_tilde) return 0.0;
    double denom = 0.0;
    for (std::size_t k = 0; k < data.g_anchor.size(); ++k) {
        denom += linalg::real_inner(data.g_anchor[k], apply_shifted_pinv(data.eig, lambda, data.g_anchor[k]));
    }
    denom *= 2.0;
    const double mu = (data.q_tilde - lin0) / denom;
    if (!(denom > 0.0) || !std::isfinite(mu)) {
        throw SubproblemInfeasible("compute_mu: harvesting constraint binds but G F_anchor is degenerate");
    }
    return mu;
}

double power_of_lambda(double lambda, const QuadraticData& data) {
    return precoder_closed_form(lambda, compute_mu(lambda, data), data).total_power();
}

double subproblem_objective(const PrecoderSet& f, const QuadraticData& data) {
    double z = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        z += linalg::real_inner(f[k], data.a * f[k]) - 2.0 * linalg::real_inner(data.linear[k], f[k]);
    }
    return z;
}

double subproblem_lagrangian(const PrecoderSet& f, double lambda, double mu, double power_budget,
                             const QuadraticData& data) {
    return subproblem_objective(f, data) + lambda * (f.total_power() - power_budget) +
           mu * (data.q_tilde - linearized_harvest(f, data));
}

namespace {

/// True when F(0) actually minimizes the lambda = 0 Lagrangian, i.e. the right-hand side
/// has no component in the null space of A that the pseudoinverse silently dropped.
bool zero_lambda_is_stationary(const PrecoderSet& f0, double mu, const QuadraticData& data) {
    for (std::size_t k = 0; k < f0.size(); ++k) {
        CMat rhs = data.linear[k];
        if (mu != 0.0) rhs += mu * data.g_anchor[k];
        const double scale = rhs.norm();
        if (scale == 0.0) continue;
        if ((data.a * f0[k] - rhs).norm() > 1e-9 * scale) return false;
    }
    return true;
}

/// Limit of the closed form as lambda -> 0+ for singular A with mu / lambda held finite.
/// The null-space part of G F_a then supplies the missing harvest without changing the
/// objective. Empty when there is no deficit or no null-space component to use.
std::optional<PrecoderSet> zero_lambda_limit(const QuadraticData& data) {
    if (!data.harvest_active || data.eig.values.size() == 0) return std::nullopt;
    PrecoderSet f = precoder_closed_form(0.0, 0.0, data);
    const double deficit = data.q_tilde - linearized_harvest(f, data);
    if (deficit <= 0.0) return std::nullopt;

    const double tol = 1e-12 * data.eig.values.maxCoeff();
    std::vector<Eigen::Index> null_idx;
    for (Eigen::Index i = 0; i < data.eig.values.size(); ++i)
        if (data.eig.values(i) <= tol) null_idx.push_back(i);
    if (null_idx.empty()) return std::nullopt;
    CMat basis(data.eig.basis.rows(), static_cast<Eigen::Index>(null_idx.size()));
    for (std::size_t j = 0; j < null_idx.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = data.eig.basis.col(null_idx[j]);

    std::vector<CMat> null_part;
    double gain = 0.0, scale = 0.0;
    for (const auto& g : data.g_anchor) {
        null_part.push_back(basis * (basis.adjoint() * g));
        gain += 2.0 * null_part.back().squaredNorm();
        scale += g.squaredNorm();
    }
    if (gain <= 1e-14 * scale) return std::nullopt;
    const double c = deficit / gain;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += c * null_part[k];
    return f;
}

}  // namespace

DualSolution dual_bisection(const QuadraticData& data, double power_budget, double eps) {
    DualSolution out;

    // lambda = 0 branch: the power constraint is slack
    try {
        const double mu0 = compute_mu(0.0, data);
        PrecoderSet f0 = precoder_closed_form(0.0, mu0, data);
        if (f0.total_power() <= power_budget && zero_lambda_is_stationary(f0, mu0, data)) {
            out.f = std::move(f0);
            out.mu = mu0;
            return out;
        }
    } catch (const SubproblemInfeasible&) {
        // G F_anchor lies in the null space of A; only lambda > 0 can satisfy the constraint
    }
    if (auto f0 = zero_lambda_limit(data); f0 && f0->total_power() <= power_budget) {
        out.f = std::move(*f0);
        return out;
    }

    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (power_of_lambda(hi, data) > power_budget) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 60) throw NumericalError("dual_bisection: failed to bracket lambda");
    }
    int it = 0;
    while (hi - lo > eps * hi && it < 200) {
        const double mid = 0.5 * (lo + hi);
        if (power_of_lambda(mid, data) > power_budget) lo = mid;
        else hi = mid;
        ++it;
    }
    out.lambda = hi;
    out.mu = compute_mu(hi, data);
    out.f = precoder_closed_form(hi, out.mu, data);
    out.iterations = it;
    return out;
}

PrecoderSolveResult sca_precoder_solve(const AuxState& aux, const EffectiveChannels& eff, const PrecoderSet& f_init,
                                       const SystemConfig& c, const PrecoderSolveOptions& opt) {
    if (f_init.total_power() > c.power_budget * (1.0 + kFeasibilitySlack)) {
        throw PreconditionError("sca_precoder_solve: initial precoders exceed the power budget");
    }
    if (harvested_power_quadratic(f_init, eff.g) < c.eh_threshold * (1.0 - kFeasibilitySlack)) {
        throw PreconditionError("sca_precoder_solve: initial precoders violate the harvesting constraint");
    }

    PrecoderSolveResult out;
    out.f = f_init;
    QuadraticData data = build_quadratic(aux, eff, f_init, c);
    double z = subproblem_objective(f_init, data);
    out.objective.push_back(z);

    for (int n = 0; n < opt.max_iterations; ++n) {
        if (n > 0) data = build_quadratic(aux, eff, out.f, c);
        const DualSolution sol = dual_bisection(data, c.power_budget, opt.bisection_tolerance);
        const double z_new = subproblem_objective(sol.f, data);
        // An increase can only come from rounding in the bisection; keep the better point.
        if (z_new > z + 1e-12 * std::abs(z)) break;
        out.f = sol.f;
        out.lambda = sol.lambda;
        out.mu = sol.mu;
        out.objective.push_back(z_new);
        ++out.iterations;
        const double denom = std::max(std::abs(z_new), std::numeric_limits<double>::min());
        const bool done = std::abs(z_new - z) / denom < opt.tolerance;
        z = z_new;
        if (done) break;
    }
    return out;
}

PrecoderSolveResult sca_precoder_solve(const AuxState& aux, const PhaseVector& phi, const ChannelSet& ch,
                                       const PrecoderSet& f_init, const SystemConfig& c,
                                       const PrecoderSolveOptions& opt) {
    return sca_precoder_solve(aux, effective_channels(ch, phi, c), f_init, c, opt);
}

}  // namespace irs
