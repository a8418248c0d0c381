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

/// Harvested power as a function of the phase vector for fixed precoders:
///   T(phi) = phi^H Upsilon phi + 2 Re{phi^H g*} + direct
struct HarvestTerms {
    CMat upsilon;         // G_r (.) C^T, Hermitian PSD
    CVec g;               // diag(G_br)
    double direct = 0.0;  // tr(G_b F~)
};

HarvestTerms assemble_harvest_terms(const PrecoderSet& f, const ChannelSet& channels, const SystemConfig& config);

double harvest_of_phase(const PhaseVector& phi, const HarvestTerms& terms);

/// Unit-modulus QCQP of the phase block:
///   min  phi^H Xi phi + 2 Re{phi^H v*}   s.t. T(phi) >= Q-bar, |phi_m| = 1
struct PhaseQcqpData {
    CMat xi;   // B (.) C^T
    CVec v;    // diag(V)
    HarvestTerms eh;
    double q_frown = 0.0;     // Q-bar - tr(G_b F~)
    double lambda_max = 0.0;  // largest eigenvalue of Xi
};

PhaseQcqpData assemble_phase_qcqp(const AuxState& aux, const PrecoderSet& f, const ChannelSet& channels,
                                  const SystemConfig& config);

/// f(phi) = phi^H Xi phi + 2 Re{phi^H v*}
double phase_objective(const PhaseVector& phi, const PhaseQcqpData& data);

/// One majorization step around an anchor.
struct MmState {
    PhaseVector anchor;
    double curvature = 0.0;  // c in X = c I; lambda_max gives a global majorizer
    CVec q;              // (c I - Xi) phi_a - v*
    CVec w;              // g* + Upsilon phi_a, the linearized harvest direction
    double q_hat = 0.0;  // Q_frown + phi_a^H Upsilon phi_a
};

MmState mm_prepare(const PhaseQcqpData& data, const PhaseVector& anchor);
/// Same with X = curvature I. Below lambda_max the surrogate is only a local model.
MmState mm_prepare(const PhaseQcqpData& data, const PhaseVector& anchor, double curvature);

/// y(phi | phi_a) + 2 Re{phi^H v*}; upper bound of f on the unit-modulus set, tight at the anchor.
double mm_surrogate(const PhaseVector& phi, const MmState& state, const PhaseQcqpData& data);

/// exp(j arg(q + p w)), arg(0) := 0.
PhaseVector phase_closed_form(double price, const MmState& state);

/// J(p) = 2 Re{phi(p)^H w}. Non-decreasing in p.
double eh_slack(double price, const MmState& state);

/// 2 Re{phi^H w} for an arbitrary phi.
double linearized_phase_harvest(const PhaseVector& phi, const MmState& state);

struct PriceSolution {
    PhaseVector phi;
    double price = 0.0;
    int iterations = 0;
};

/// Globally optimal solution of max 2 Re{phi^H q} s.t. 2 Re{phi^H w} >= q_hat, |phi_m| = 1.
/// Throws SubproblemInfeasible when no unit-modulus vector meets the constraint.
PriceSolution price_bisection(const MmState& state, double eps = 1e-8);

struct PhaseSolveOptions {
    double tolerance = 1e-6;
    int max_iterations = 200;
    double bisection_tolerance = 1e-8;
    /// Try X = c I with c below lambda_max and accept the step only when the surrogate
    /// still bounds f at the new point (backtracking towards lambda_max otherwise).
    bool adaptive_curvature = true;
};

struct PhaseSolveResult {
    PhaseVector phi;
    std::vector<double> objective;  // f(phi^(n)), starting with the initial point
    int iterations = 0;
    double price = 0.0;
};

/// Majorization-minimization over the phase block with the harvesting constraint
/// linearized at each anchor. Every iterate is unit-modulus and harvest-feasible.
/// Throws PreconditionError if phi_init violates the harvesting constraint.
PhaseSolveResult phase_solve(const AuxState& aux, const PrecoderSet& f, const ChannelSet& channels,
                             const PhaseVector& phi_init, const SystemConfig& config,
                             const PhaseSolveOptions& options = {});
PhaseSolveResult phase_solve(const PhaseQcqpData& data, const PhaseVector& phi_init, const SystemConfig& config,
                             const PhaseSolveOptions& options = {});

}  // namespace irs
