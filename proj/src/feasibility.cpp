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

#include "irs/feasibility.hpp"

#include "irs/linalg.hpp"

#include <cmath>

namespace irs {

EnergyBeam max_eh_precoder(const EffectiveChannels& eff, const SystemConfig& c) {
    auto [chi, b] = linalg::max_eigenpair(eff.g);
    EnergyBeam out;
    out.chi = std::max(chi, 0.0);
    out.direction = b;
    out.f = PrecoderSet::zeros(c);
    const double amp = std::sqrt(c.power_budget / static_cast<double>(c.n_irs));
    for (auto& fk : out.f.blocks) fk.col(0) = amp * b;
    out.q_value = out.chi * c.power_budget;
    return out;
}

PhaseVector max_eh_phase_step(const HarvestTerms& t, const PhaseVector& anchor) {
    return PhaseVector{linalg::unit_phase(t.g.conjugate() + t.upsilon * anchor.values)};
}

namespace {

FeasibilityResult alternate(const ChannelSet& ch, const SystemConfig& c, const FeasibilityOptions& opt) {
    ch.validate(c);
    FeasibilityResult out;
    PhaseVector phi = PhaseVector::ones(ch.n_elements());
    EnergyBeam beam = max_eh_precoder(effective_channels(ch, phi, c), c);
    double q = beam.q_value;
    out.f = beam.f;
    out.phi = phi;
    out.q_achieved = q;
    out.q_trajectory.push_back(q);

    auto reached = [&] { return opt.stop_at_threshold && out.q_achieved >= c.eh_threshold; };
    if (reached() || ch.n_elements() == 0) {
        out.feasible = out.q_achieved >= c.eh_threshold;
        return out;
    }
    for (int n = 0; n < opt.max_iterations; ++n) {
        ++out.iterations;
        const double q_prev = q;
        const HarvestTerms terms = assemble_harvest_terms(beam.f, ch, c);
        phi = max_eh_phase_step(terms, phi);
        q = harvest_of_phase(phi, terms);
        out.q_trajectory.push_back(q);
        beam = max_eh_precoder(effective_channels(ch, phi, c), c);
        q = beam.q_value;
        out.q_trajectory.push_back(q);
        if (q > out.q_achieved) {
            out.q_achieved = q;
            out.f = beam.f;
            out.phi = phi;
        }
        if (reached()) break;
        if (q - q_prev <= opt.stall_tolerance * std::abs(q)) break;
    }
    out.feasible = out.q_achieved >= c.eh_threshold;
    return out;
}

}  // namespace

FeasibilityResult feasibility_check(const ChannelSet& ch, const SystemConfig& c, const FeasibilityOptions& opt) {
    return alternate(ch, c, opt);
}

FeasibilityResult maximize_harvest(const ChannelSet& ch, const SystemConfig& c, int max_iterations,
                                   double stall_tolerance) {
    FeasibilityOptions opt;
    opt.max_iterations = max_iterations;
    opt.stall_tolerance = stall_tolerance;
    opt.stop_at_threshold = false;
    return alternate(ch, c, opt);
}

}  // namespace irs
