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

#include "irs/harness.hpp"

#include "irs/config_io.hpp"
#include "irs/feasibility.hpp"
#include "irs/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace irs {

std::string to_string(Method m) {
    switch (m) {
        case Method::bcd: return "bcd";
        case Method::fixed_phase: return "fixed-phase";
        case Method::no_irs: return "no-irs";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    if (s == "bcd") return Method::bcd;
    if (s == "fixed-phase") return Method::fixed_phase;
    if (s == "no-irs") return Method::no_irs;
    throw PreconditionError("unknown method '" + s + "'");
}

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids{"max-harvest-vs-distance", "convergence", "wsr-vs-M",
                                              "wsr-vs-Qbar", "wsr-vs-alphaIRS", "wsr-vs-xER", "wsr-vs-xIR"};
    return ids;
}

void ExperimentSpec::validate() const {
    const auto& ids = experiment_ids();
    if (std::find(ids.begin(), ids.end(), experiment) == ids.end()) {
        throw PreconditionError("unknown experiment '" + experiment + "'");
    }
    if (sweep.empty()) throw PreconditionError("sweep must not be empty");
    if (trials < 1) throw PreconditionError("trials must be >= 1");
    if (methods.empty()) throw PreconditionError("at least one method is required");
    for (double v : sweep) {
        SystemConfig c = config;
        Geometry g = geometry;
        apply_sweep_value(experiment, v, c, g);
        c.validate();
        g.validate();
    }
}

void apply_sweep_value(const std::string& experiment, double v, SystemConfig& c, Geometry& g) {
    if (!std::isfinite(v)) throw PreconditionError("sweep values must be finite");
    if (experiment == "max-harvest-vs-distance" || experiment == "wsr-vs-xER") {
        g.er_center.x = v;
        g.irs_position.x = v;
    } else if (experiment == "convergence" || experiment == "wsr-vs-M") {
        if (v < 0.0 || v != std::floor(v)) throw PreconditionError("M sweep values must be non-negative integers");
        c.n_elements = static_cast<int>(v);
    } else if (experiment == "wsr-vs-Qbar") {
        c.eh_threshold = v;
    } else if (experiment == "wsr-vs-alphaIRS") {
        g.alpha_bs_irs = v;
        g.alpha_irs_er = v;
        g.alpha_irs_ir = v;
    } else if (experiment == "wsr-vs-xIR") {
        g.ir_center.x = v;
    } else {
        throw PreconditionError("unknown experiment '" + experiment + "'");
    }
}

std::uint64_t trial_seed(std::uint64_t seed_base, int sweep_index, int trial) {
    std::uint64_t h = mix_seed(seed_base);
    h = mix_seed(h ^ static_cast<std::uint64_t>(sweep_index));
    h = mix_seed(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

SolveReport run_bcd(const ChannelSet& ch, const SystemConfig& c, const BcdOptions& opt) {
    return bcd_solve(ch, c, opt);
}

SolveReport run_no_irs(const ChannelSet& ch, const SystemConfig& c, const BcdOptions& opt) {
    SystemConfig bare = c;
    bare.n_elements = 0;
    return bcd_solve(ch.without_surface(), bare, opt);
}

SolveReport run_fixed_phase(const ChannelSet& ch, const SystemConfig& c, const BcdOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const FeasibilityResult fr = feasibility_check(ch, c);
    SolveReport rep;
    if (!fr.feasible) {
        rep.f = fr.f;
        rep.phi = fr.phi;
        rep.q_watts = fr.q_achieved;
        rep.diagnostic = "harvesting threshold not reachable";
    } else {
        BcdOptions fixed = opt;
        fixed.optimize_phase = false;
        const PrecoderSet f0 = information_initializer(effective_channels(ch, fr.phi, c), c);
        rep = bcd_solve(ch, c, f0, fr.phi, fixed);
    }
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

TrialResult max_harvest_trial(const ChannelSet& ch, const SystemConfig& c, Method method) {
    TrialResult r;
    FeasibilityResult fr;
    if (method == Method::no_irs) {
        SystemConfig bare = c;
        bare.n_elements = 0;
        fr = maximize_harvest(ch.without_surface(), bare);
    } else if (method == Method::fixed_phase) {
        // unit phases, precoder only
        FeasibilityOptions opt;
        opt.max_iterations = 0;
        opt.stop_at_threshold = false;
        fr = feasibility_check(ch, c, opt);
    } else {
        fr = maximize_harvest(ch, c);
    }
    r.q_watts = fr.q_achieved;
    r.feasible = fr.q_achieved >= c.eh_threshold;
    r.iterations = fr.iterations;
    return r;
}

}  // namespace

TrialResult run_trial(const ExperimentSpec& spec, int sweep_index, int trial, Method method) {
    const auto start = std::chrono::steady_clock::now();
    SystemConfig c = spec.config;
    Geometry g = spec.geometry;
    const double value = spec.sweep.at(static_cast<std::size_t>(sweep_index));
    const std::uint64_t seed = trial_seed(spec.seed_base, sweep_index, trial);

    TrialResult r;
    try {
        apply_sweep_value(spec.experiment, value, c, g);
        c.fill_default_weights();
        const ChannelSet ch = generate_scenario(c, g, seed);
        if (spec.experiment == "max-harvest-vs-distance") {
            r = max_harvest_trial(ch, c, method);
        } else {
            SolveReport rep;
            switch (method) {
                case Method::bcd: rep = run_bcd(ch, c, spec.solver); break;
                case Method::fixed_phase: rep = run_fixed_phase(ch, c, spec.solver); break;
                case Method::no_irs: rep = run_no_irs(ch, c, spec.solver); break;
            }
            r.feasible = rep.feasible;
            r.wsr_bits = rep.feasible ? rep.wsr_bits : 0.0;
            r.q_watts = rep.q_watts;
            r.iterations = rep.iterations_used;
            r.diagnostic = rep.diagnostic;
            for (const auto& p : rep.wsr_trajectory) r.trajectory.push_back(p.wsr_bits);
        }
    } catch (const std::exception& e) {
        r = TrialResult{};
        r.diagnostic = e.what();
    }
    r.experiment = spec.experiment;
    r.sweep_value = value;
    r.sweep_index = sweep_index;
    r.trial = trial;
    r.method = method;
    r.seed = seed;
    if (!r.feasible) r.wsr_bits = 0.0;
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<TrialResult> run_experiment(const ExperimentSpec& spec, int threads) {
    spec.validate();
    struct Job {
        int sweep_index;
        int trial;
        Method method;
    };
    std::vector<Job> jobs;
    for (int s = 0; s < static_cast<int>(spec.sweep.size()); ++s) {
        for (int t = 0; t < spec.trials; ++t) {
            for (Method m : spec.methods) jobs.push_back({s, t, m});
        }
    }
    std::vector<TrialResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            results[i] = run_trial(spec, jobs[i].sweep_index, jobs[i].trial, jobs[i].method);
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results) {
    std::vector<SummaryRow> rows;
    std::map<std::pair<int, Method>, std::size_t> index;
    std::vector<std::vector<const TrialResult*>> groups;
    for (const auto& r : results) {
        const auto key = std::make_pair(r.sweep_index, r.method);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, rows.size()).first;
            SummaryRow row;
            row.sweep_value = r.sweep_value;
            row.method = r.method;
            rows.push_back(row);
            groups.emplace_back();
        }
        groups[it->second].push_back(&r);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        const auto& grp = groups[i];
        row.count = static_cast<int>(grp.size());
        double sw = 0.0, sq = 0.0, nf = 0.0;
        for (const auto* r : grp) {
            sw += r->wsr_bits;
            sq += r->q_watts;
            nf += r->feasible ? 1.0 : 0.0;
        }
        row.wsr_mean = sw / row.count;
        row.q_mean = sq / row.count;
        row.feasible_fraction = nf / row.count;
        if (row.count > 1) {
            double vw = 0.0, vq = 0.0;
            for (const auto* r : grp) {
                vw += (r->wsr_bits - row.wsr_mean) * (r->wsr_bits - row.wsr_mean);
                vq += (r->q_watts - row.q_mean) * (r->q_watts - row.q_mean);
            }
            row.wsr_std = std::sqrt(vw / (row.count - 1));
            row.q_std = std::sqrt(vq / (row.count - 1));
        }
    }
    return rows;
}

namespace {

std::string full_precision(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string format_csv(const std::vector<TrialResult>& results, bool include_timing) {
    std::ostringstream os;
    os << "experiment,sweep_value,method,seed,feasible,wsr_bits,q_watts,iterations,wall_time_s\n";
    for (const auto& r : results) {
        os << r.experiment << ',' << full_precision(r.sweep_value) << ',' << to_string(r.method) << ',' << r.seed
           << ',' << (r.feasible ? 1 : 0) << ',' << full_precision(r.wsr_bits) << ',' << full_precision(r.q_watts)
           << ',' << r.iterations << ',' << full_precision(include_timing ? r.wall_time_s : 0.0) << '\n';
    }
    return os.str();
}

std::string format_json(const std::vector<TrialResult>& results, const ExperimentSpec& spec, bool include_timing) {
    json doc;
    doc["spec"] = to_json(spec);
    doc["records"] = json::array();
    for (const auto& r : results) doc["records"].push_back(to_json(r, include_timing));
    doc["summary"] = json::array();
    for (const auto& s : summarize(results)) {
        doc["summary"].push_back({{"sweep_value", s.sweep_value},
                                  {"method", to_string(s.method)},
                                  {"count", s.count},
                                  {"wsr_mean", s.wsr_mean},
                                  {"wsr_std", s.wsr_std},
                                  {"q_mean", s.q_mean},
                                  {"q_std", s.q_std},
                                  {"feasible_fraction", s.feasible_fraction}});
    }
    return doc.dump(2) + "\n";
}

void emit_results(const std::vector<TrialResult>& results, const ExperimentSpec& spec, const std::string& path,
                  const EmitOptions& opt) {
    if (results.empty()) throw PreconditionError("emit_results: no records");
    const std::string text = opt.format == OutputFormat::csv ? format_csv(results, opt.include_timing)
                                                             : format_json(results, spec, opt.include_timing);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace irs
