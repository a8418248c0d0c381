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

#include "irs/phase_opt.hpp"

#include "irs/linalg.hpp"
#include "irs/precoder_opt.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

namespace irs {

namespace {

CMat sum_outer(const PrecoderSet& f, Eigen::Index nb) {
    CMat f_tilde = CMat::Zero(nb, nb);
    for (const auto& fk : f.blocks) f_tilde.noalias() += fk * fk.adjoint();
    return linalg::hermitian_part(f_tilde);
}

/// diag(a b) without forming the product.
CVec diag_of_product(const CMat& a, const CMat& b) {
    return (a.cwiseProduct(b.transpose())).rowwise().sum();
}

}  // namespace

HarvestTerms assemble_harvest_terms(const PrecoderSet& f, const ChannelSet& ch, const SystemConfig& c) {
    const Eigen::Index nb = ch.z.cols();
    const Eigen::Index m = ch.z.rows();
    const CMat f_tilde = sum_outer(f, nb);
    const CMat zf = ch.z * f_tilde;              // Z F~
    const CMat cmat = linalg::hermitian_part(zf * ch.z.adjoint());  // C = Z F~ Z^H

    CMat g_b = CMat::Zero(nb, nb);
    CMat g_r = CMat::Zero(m, m);
    CMat g_rb = CMat::Zero(nb, m);  // sum alpha eta G_b^H G_r
    for (std::size_t l = 0; l < ch.g_b.size(); ++l) {
        const double s = c.eh_weights[l] * c.eh_efficiency;
        g_b.noalias() += s * ch.g_b[l].adjoint() * ch.g_b[l];
        g_r.noalias() += s * ch.g_r[l].adjoint() * ch.g_r[l];
        g_rb.noalias() += s * ch.g_b[l].adjoint() * ch.g_r[l];
    }
    HarvestTerms t;
    t.upsilon = linalg::hermitian_part(g_r.cwiseProduct(cmat.transpose()));
    t.g = diag_of_product(zf, g_rb);  // diag(Z F~ sum G_b^H G_r)
    t.direct = (g_b * f_tilde).trace().real();
    return t;
}

double harvest_of_phase(const PhaseVector& phi, const HarvestTerms& t) {
    const cdouble quad = phi.values.dot(t.upsilon * phi.values);  // dot conjugates the left side
    const cdouble lin = phi.values.dot(t.g.conjugate());
    return quad.real() + 2.0 * lin.real() + t.direct;
}

PhaseQcqpData assemble_phase_qcqp(const AuxState& aux, const PrecoderSet& f, const ChannelSet& ch,
                                  const SystemConfig& c) {
    const Eigen::Index nb = ch.z.cols();
    const Eigen::Index m = ch.z.rows();
    const CMat f_tilde = sum_outer(f, nb);
    const CMat cmat = linalg::hermitian_part(ch.z * f_tilde * ch.z.adjoint());

    CMat b = CMat::Zero(m, m);
    CVec v = CVec::Zero(m);
    for (std::size_t k = 0; k < ch.h_b.size(); ++k) {
        const double wk = c.rate_weights[k];
        const CMat uh_r = aux.u[k].adjoint() * ch.h_r[k];  // d x M
        b.noalias() += wk * (uh_r.adjoint() * aux.w[k] * uh_r);
        // D_k - T_k = omega Z (F~ H_b^H U W - F_k W) U^H H_r; only the diagonal is needed
        const CMat left = wk * (ch.z * (f_tilde * ch.h_b[k].adjoint() * aux.u[k] * aux.w[k] - f[k] * aux.w[k]));
        v += diag_of_product(left, uh_r);
    }
    PhaseQcqpData data;
    data.xi = linalg::hermitian_part(b.cwiseProduct(cmat.transpose()));
    data.v = v;
    data.eh = assemble_harvest_terms(f, ch, c);
    data.q_frown = c.eh_threshold - data.eh.direct;
    data.lambda_max = linalg::max_eigenvalue(data.xi);
    return data;
}

double phase_objective(const PhaseVector& phi, const PhaseQcqpData& data) {
    const cdouble quad = phi.values.dot(data.xi * phi.values);
    const cdouble lin = phi.values.dot(data.v.conjugate());
    return quad.real() + 2.0 * lin.real();
}

MmState mm_prepare(const PhaseQcqpData& data, const PhaseVector& anchor) {
    return mm_prepare(data, anchor, data.lambda_max);
}

MmState mm_prepare(const PhaseQcqpData& data, const PhaseVector& anchor, double curvature) {
    MmState s;
    s.anchor = anchor;
    s.curvature = curvature;
    const CVec xi_a = data.xi * anchor.values;
    s.q = curvature * anchor.values - xi_a - data.v.conjugate();
    const CVec ups_a = data.eh.upsilon * anchor.values;
    s.w = data.eh.g.conjugate() + ups_a;
    s.q_hat = data.q_frown + anchor.values.dot(ups_a).real();
    return s;
}

double mm_surrogate(const PhaseVector& phi, const MmState& s, const PhaseQcqpData& data) {
    const CVec& x = phi.values;
    const CVec& a = s.anchor.values;
    const CVec diff_a = s.curvature * a - data.xi * a;  // (X - Xi) phi_a
    const double y = s.curvature * x.squaredNorm() - 2.0 * x.dot(diff_a).real() + a.dot(diff_a).real();
    return y + 2.0 * x.dot(data.v.conjugate()).real();
}

PhaseVector phase_closed_form(double price, const MmState& s) {
    if (price == 0.0) return PhaseVector{linalg::unit_phase(s.q)};
    return PhaseVector{linalg::unit_phase(s.q + price * s.w)};
}

double linearized_phase_harvest(const PhaseVector& phi, const MmState& s) {
    return 2.0 * phi.values.dot(s.w).real();
}

double eh_slack(double price, const MmState& s) { return linearized_phase_harvest(phase_closed_form(price, s), s); }

PriceSolution price_bisection(const MmState& s, double eps) {
    PriceSolution out;
    const double limit = 2.0 * s.w.cwiseAbs().sum();
    // 2 Re{phi^H w} ranges over [-limit, limit]; a threshold at or below -limit is vacuous
    if (s.q_hat <= -limit || eh_slack(0.0, s) >= s.q_hat) {
        out.phi = phase_closed_form(0.0, s);
        return out;
    }
    if (limit < s.q_hat) {
        throw SubproblemInfeasible("price_bisection: linearized harvesting constraint cannot be met");
    }
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (eh_slack(hi, s) < s.q_hat) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 60) {
            // J(p) only reaches q_hat in the limit; the anchor is the remaining feasible point
            if (s.anchor.size() && linearized_phase_harvest(s.anchor, s) >= s.q_hat) {
                out.phi = s.anchor;
                out.price = std::numeric_limits<double>::infinity();
                return out;
            }
            throw SubproblemInfeasible("price_bisection: failed to bracket the price");
        }
    }
    int it = 0;
    while (hi - lo > eps * hi && it < 200) {
        const double mid = 0.5 * (lo + hi);
        if (eh_slack(mid, s) >= s.q_hat) hi = mid;
        else lo = mid;
        ++it;
    }
    out.phi = phase_closed_form(hi, s);
    out.price = hi;
    out.iterations = it;
    return out;
}

PhaseSolveResult phase_solve(const PhaseQcqpData& data, const PhaseVector& phi_init, const SystemConfig& c,
                             const PhaseSolveOptions& opt) {
    if (phi_init.size() != data.xi.rows()) throw PreconditionError("phase_solve: phase vector length != M");
    if (phi_init.modulus_error() > 1e-9) throw PreconditionError("phase_solve: initial phases are not unit modulus");
    if (harvest_of_phase(phi_init, data.eh) < c.eh_threshold * (1.0 - kFeasibilitySlack)) {
        throw PreconditionError("phase_solve: initial phases violate the harvesting constraint");
    }
    PhaseSolveResult out;
    out.phi = phi_init;
    double f = phase_objective(phi_init, data);
    out.objective.push_back(f);
    if (phi_init.size() == 0) return out;

    const double c_max = data.lambda_max;
    double curv = c_max;
    auto step = [&](double curvature) {
        const MmState state = mm_prepare(data, out.phi, curvature);
        // Q-bar <= 0 leaves the harvesting constraint vacuous, so the unconstrained step is exact
        PriceSolution sol = c.eh_threshold > 0.0 ? price_bisection(state, opt.bisection_tolerance)
                                                 : PriceSolution{phase_closed_form(0.0, state), 0.0, 0};
        return std::make_pair(state, sol);
    };
    for (int n = 0; n < opt.max_iterations; ++n) {
        if (!opt.adaptive_curvature) curv = c_max;
        else curv = std::max(0.5 * curv, 1e-6 * c_max);
        auto [state, sol] = step(curv);
        while (curv < c_max) {
            const double bound = mm_surrogate(sol.phi, state, data);
            if (phase_objective(sol.phi, data) <= bound + 1e-12 * std::abs(bound)) break;
            curv = std::min(2.0 * curv, c_max);
            std::tie(state, sol) = step(curv);
        }
        const double f_new = phase_objective(sol.phi, data);
        if (f_new > f + 1e-12 * std::abs(f)) break;
        out.phi = sol.phi;
        out.price = sol.price;
        out.objective.push_back(f_new);
        ++out.iterations;
        const double denom = std::max(std::abs(f_new), std::numeric_limits<double>::min());
        const bool done = std::abs(f_new - f) / denom <= opt.tolerance;
        f = f_new;
        if (done) break;
    }
    return out;
}

PhaseSolveResult phase_solve(const AuxState& aux, const PrecoderSet& f, const ChannelSet& ch,
                             const PhaseVector& phi_init, const SystemConfig& c, const PhaseSolveOptions& opt) {
    return phase_solve(assemble_phase_qcqp(aux, f, ch, c), phi_init, c, opt);
}

}  // namespace irs
