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
#include "irs/metrics.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace irs;
using namespace irs::test;
using Catch::Approx;

TEST_CASE("energy beam for a scaled identity") {
    const SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 0);
    EffectiveChannels eff;
    eff.g = 0.7 * CMat::Identity(3, 3);
    const EnergyBeam beam = max_eh_precoder(eff, c);
    CHECK(beam.chi == Approx(0.7));
    CHECK(beam.q_value == Approx(0.7 * c.power_budget));
    CHECK(harvested_power_quadratic(beam.f, eff.g) == Approx(beam.q_value));
}

TEST_CASE("energy beam uses the full budget and beats random precoders") {
    Gen g(1);
    for (int trial = 0; trial < 10; ++trial) {
        const SystemConfig c = small_config(4, 2, 2, 2, 3, 2, 5);
        const ChannelSet ch = random_channels(c, g);
        const EffectiveChannels eff = effective_channels(ch, random_phases(5, g), c);
        const EnergyBeam beam = max_eh_precoder(eff, c);
        CHECK(beam.f.total_power() == Approx(c.power_budget).epsilon(1e-12));
        CHECK(harvested_power_quadratic(beam.f, eff.g) == Approx(beam.q_value).epsilon(1e-10));
        CHECK(harvested_power(beam.f, eff, c).weighted == Approx(beam.q_value).epsilon(1e-10));
        for (int i = 0; i < 1000; ++i) {
            const PrecoderSet f = random_precoders(c, g, c.power_budget);
            CHECK(harvested_power_quadratic(f, eff.g) <= beam.q_value * (1 + 1e-12));
        }
    }
}

TEST_CASE("phase ascent step aligns with the harvest gradient") {
    HarvestTerms t;
    t.upsilon = CMat::Zero(2, 2);
    t.g = CVec(2);
    t.g << cdouble(0, 1), cdouble(-2, 0);
    const PhaseVector p = max_eh_phase_step(t, PhaseVector::ones(2));
    // exp(j arg(g*))
    CHECK(std::abs(p.values[0] - cdouble(0, -1)) < 1e-15);
    CHECK(std::abs(p.values[1] - cdouble(-1, 0)) < 1e-15);
    CHECK(harvest_of_phase(p, t) == Approx(2.0 * (1.0 + 2.0)));
}

TEST_CASE("phase ascent never decreases the harvest") {
    Gen g(2);
    for (int trial = 0; trial < 20; ++trial) {
        const SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 6);
        const ChannelSet ch = random_channels(c, g, 1.0);
        const HarvestTerms t = assemble_harvest_terms(random_precoders(c, g, 1.0), ch, c);
        PhaseVector p = random_phases(6, g);
        double prev = harvest_of_phase(p, t);
        for (int i = 0; i < 20; ++i) {
            p = max_eh_phase_step(t, p);
            const double q = harvest_of_phase(p, t);
            CHECK(q >= prev - 1e-12 * std::abs(prev));
            prev = q;
        }
    }
}

TEST_CASE("zero threshold is feasible immediately") {
    Gen g(3);
    SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 4);
    c.eh_threshold = 0.0;
    const FeasibilityResult r = feasibility_check(random_channels(c, g), c);
    CHECK(r.feasible);
    CHECK(r.iterations == 0);
    CHECK(r.phi.modulus_error() < 1e-15);
}

TEST_CASE("impossible threshold is reported infeasible") {
    Gen g(4);
    SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 4);
    const ChannelSet ch = random_channels(c, g);
    c.eh_threshold = 1e6;
    const FeasibilityResult r = feasibility_check(ch, c);
    CHECK_FALSE(r.feasible);
    CHECK(r.q_achieved < c.eh_threshold);
}

TEST_CASE("alternation is monotone and its best point is consistent") {
    Gen g(5);
    for (int trial = 0; trial < 20; ++trial) {
        const SystemConfig c = small_config(3, 2, 2, 2, 3, 2, 6);
        const ChannelSet ch = random_channels(c, g, 1.0);
        const FeasibilityResult r = maximize_harvest(ch, c);
        for (std::size_t i = 1; i < r.q_trajectory.size(); ++i) {
            CHECK(r.q_trajectory[i] >= r.q_trajectory[i - 1] * (1 - 1e-12));
        }
        const double q = harvested_power(r.f, effective_channels(ch, r.phi, c), c).weighted;
        CHECK(q == Approx(r.q_achieved).epsilon(1e-10));
        CHECK(r.f.total_power() <= c.power_budget * (1 + 1e-12));
        CHECK(r.phi.modulus_error() < 1e-12);
    }
}

TEST_CASE("feasible points satisfy the threshold") {
    Gen g(6);
    int feasible = 0;
    for (int trial = 0; trial < 20; ++trial) {
        SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 5);
        const ChannelSet ch = random_channels(c, g, 1.0);
        const double best = maximize_harvest(ch, c).q_achieved;
        c.eh_threshold = (trial % 2 ? 0.9 : 1.2) * best;
        const FeasibilityResult r = feasibility_check(ch, c);
        if (r.feasible) {
            ++feasible;
            CHECK(harvested_power(r.f, effective_channels(ch, r.phi, c), c).weighted >= c.eh_threshold * (1 - 1e-12));
        }
    }
    CHECK(feasible >= 10);
}

TEST_CASE("without a surface the energy beam is the answer") {
    Gen g(7);
    const SystemConfig c = small_config(3, 2, 2, 2, 2, 2, 0);
    const ChannelSet ch = random_channels(c, g);
    const FeasibilityResult r = maximize_harvest(ch, c);
    const EnergyBeam beam = max_eh_precoder(effective_channels(ch, PhaseVector::ones(0), c), c);
    CHECK(r.q_achieved == Approx(beam.q_value));
    CHECK(r.iterations == 0);
}
