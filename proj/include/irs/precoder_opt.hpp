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
#include "irs/types.hpp"

#include <vector>

namespace irs {

/// Spectral factorization A = Q diag(values) Q^H, computed once per quadratic so that
/// every (A + lambda I)^dagger product in the bisection is two matrix multiplies.
struct EigenCache {
    CMat basis;
    Eigen::VectorXd values;  // clamped to >= 0
};

/// Data of the convexified precoder subproblem around an anchor F^(n):
///   min  sum_k tr(F_k^H A F_k) - 2 Re sum_k tr(L_k^H F_k)
///   s.t. sum_k ||F_k||^2 <= P_T,   2 Re tr(sum_k F_k^(n)H G F_k) >= q_tilde
struct QuadraticData {
    CMat a;
    std::vector<CMat> linear;   // L_k = omega_k Hbar_k^H U_k W_k
    CMat g;
    PrecoderSet anchor;
    std::vector<CMat> g_anchor;  // G F_k^(n)
    double q_tilde = 0.0;        // Q-bar + tr(sum F^(n)H G F^(n))
    bool harvest_active = true;  // false when Q-bar <= 0 makes the constraint vacuous
    EigenCache eig;
};

QuadraticData build_quadratic(const AuxState& aux, const EffectiveChannels& eff, const PrecoderSet& anchor,
                              const SystemConfig& config);

/// Q (lambda I + Lambda)^dagger Q^H rhs. Eigenvalues below 1e-12 of the largest count as zero.
CMat apply_shifted_pinv(const EigenCache& eig, double lambda, const CMat& rhs);

/// F_k = (A + lambda I)^dagger (L_k + mu G F_k^(n)).
PrecoderSet precoder_closed_form(double lambda, double mu, const QuadraticData& data);

/// Multiplier of the linearized harvesting constraint for a given lambda: zero when the
/// constraint already holds at mu = 0, otherwise the value that makes it tight.
/// Throws SubproblemInfeasible if the constraint binds but G F^(n) spans nothing reachable.
double compute_mu(double lambda, const QuadraticData& data);

/// Total power of the mu-adjusted closed-form precoders. Non-increasing in lambda.
double power_of_lambda(double lambda, const QuadraticData& data);

/// Objective z(F) of the precoder subproblem.
double subproblem_objective(const PrecoderSet& f, const QuadraticData& data);

/// 2 Re tr(sum_k F_k^(n)H G F_k), the linearized harvest.
double linearized_harvest(const PrecoderSet& f, const QuadraticData& data);

/// Partial Lagrangian with multipliers lambda (power) and mu (linearized harvest).
double subproblem_lagrangian(const PrecoderSet& f, double lambda, double mu, double power_budget,
                             const QuadraticData& data);

struct DualSolution {
    PrecoderSet f;
    double lambda = 0.0;
    double mu = 0.0;
    int iterations = 0;
};

/// Solves the convex subproblem by bisection on lambda. The bracket starts at [0, 1] and
/// doubles its upper end until P(lambda_u) <= P_T; the search stops once the bracket is
/// narrower than eps relative to lambda_u, returning the power-feasible end.
DualSolution dual_bisection(const QuadraticData& data, double power_budget, double eps = 1e-8);

struct PrecoderSolveOptions {
    double tolerance = 1e-6;     // relative change of z
    int max_iterations = 100;
    double bisection_tolerance = 1e-8;
};

struct PrecoderSolveResult {
    PrecoderSet f;
    std::vector<double> objective;  // z(F^(n)), starting with the initial point
    int iterations = 0;
    double lambda = 0.0;
    double mu = 0.0;
};

/// Successive convex approximation over the harvesting constraint. Each iterate stays
/// feasible for the true constraint and z is non-increasing.
/// Throws PreconditionError if f_init violates the power or harvesting constraint.
PrecoderSolveResult sca_precoder_solve(const AuxState& aux, const EffectiveChannels& eff, const PrecoderSet& f_init,
                                       const SystemConfig& config, const PrecoderSolveOptions& options = {});
PrecoderSolveResult sca_precoder_solve(const AuxState& aux, const PhaseVector& phi, const ChannelSet& channels,
                                       const PrecoderSet& f_init, const SystemConfig& config,
                                       const PrecoderSolveOptions& options = {});

/// Relative slack used for the constraint checks on incoming iterates.
inline constexpr double kFeasibilitySlack = 1e-6;

}  // namespace irs
