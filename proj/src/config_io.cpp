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

#include "irs/config_io.hpp"

#include <fstream>
#include <set>

namespace irs {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw PreconditionError(std::string(what) + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) throw PreconditionError(std::string(what) + ": unknown key '" + key + "'");
    }
}

template <typename T>
void read(const json& j, const char* key, T& out, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) return;
    try {
        out = it->template get<T>();
    } catch (const json::exception& e) {
        throw PreconditionError(std::string(what) + "." + key + ": " + e.what());
    }
}

json point(const Point2& p) { return json::array({p.x, p.y}); }

void read_point(const json& j, const char* key, Point2& p, const char* what) {
    std::vector<double> xy{p.x, p.y};
    read(j, key, xy, what);
    if (xy.size() != 2) throw PreconditionError(std::string(what) + "." + key + ": expected [x, y]");
    p = {xy[0], xy[1]};
}

json matrix(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json to_json(const SystemConfig& c) {
    return {{"n_bs_antennas", c.n_bs_antennas},
            {"n_ir_antennas", c.n_ir_antennas},
            {"n_er_antennas", c.n_er_antennas},
            {"n_irs", c.n_irs},
            {"n_ers", c.n_ers},
            {"n_streams", c.n_streams},
            {"n_elements", c.n_elements},
            {"power_budget", c.power_budget},
            {"eh_threshold", c.eh_threshold},
            {"eh_efficiency", c.eh_efficiency},
            {"rate_weights", c.rate_weights},
            {"eh_weights", c.eh_weights},
            {"noise_power_ir", c.noise_power_ir},
            {"noise_power_er", c.noise_power_er},
            {"bandwidth", c.bandwidth},
            {"rician_factor", c.rician_factor},
            {"antenna_spacing_ratio", c.antenna_spacing_ratio}};
}

SystemConfig system_config_from_json(const json& j) {
    static const char* what = "config";
    check_keys(j,
               {"n_bs_antennas", "n_ir_antennas", "n_er_antennas", "n_irs", "n_ers", "n_streams", "n_elements",
                "power_budget", "eh_threshold", "eh_efficiency", "rate_weights", "eh_weights", "noise_power_ir",
                "noise_power_er", "bandwidth", "rician_factor", "antenna_spacing_ratio"},
               what);
    SystemConfig c;
    read(j, "n_bs_antennas", c.n_bs_antennas, what);
    read(j, "n_ir_antennas", c.n_ir_antennas, what);
    read(j, "n_er_antennas", c.n_er_antennas, what);
    read(j, "n_irs", c.n_irs, what);
    read(j, "n_ers", c.n_ers, what);
    read(j, "n_streams", c.n_streams, what);
    read(j, "n_elements", c.n_elements, what);
    read(j, "power_budget", c.power_budget, what);
    read(j, "eh_threshold", c.eh_threshold, what);
    read(j, "eh_efficiency", c.eh_efficiency, what);
    const bool has_rw = j.contains("rate_weights");
    const bool has_ew = j.contains("eh_weights");
    read(j, "rate_weights", c.rate_weights, what);
    read(j, "eh_weights", c.eh_weights, what);
    read(j, "noise_power_ir", c.noise_power_ir, what);
    read(j, "noise_power_er", c.noise_power_er, what);
    read(j, "bandwidth", c.bandwidth, what);
    read(j, "rician_factor", c.rician_factor, what);
    read(j, "antenna_spacing_ratio", c.antenna_spacing_ratio, what);
    // receiver counts may change without restating all-ones weights
    if (!has_rw) c.rate_weights.assign(static_cast<std::size_t>(std::max(c.n_irs, 0)), 1.0);
    if (!has_ew) c.eh_weights.assign(static_cast<std::size_t>(std::max(c.n_ers, 0)), 1.0);
    c.validate();
    return c;
}

json to_json(const Geometry& g) {
    return {{"bs_position", point(g.bs_position)},   {"er_center", point(g.er_center)},
            {"er_radius", g.er_radius},              {"ir_center", point(g.ir_center)},
            {"ir_radius", g.ir_radius},              {"irs_position", point(g.irs_position)},
            {"alpha_bs_irs", g.alpha_bs_irs},        {"alpha_irs_er", g.alpha_irs_er},
            {"alpha_irs_ir", g.alpha_irs_ir},        {"alpha_bs_ir", g.alpha_bs_ir},
            {"alpha_bs_er", g.alpha_bs_er},          {"pl0_db", g.pl0_db},
            {"d0", g.d0}};
}

Geometry geometry_from_json(const json& j) {
    static const char* what = "geometry";
    check_keys(j,
               {"bs_position", "er_center", "er_radius", "ir_center", "ir_radius", "irs_position", "alpha_bs_irs",
                "alpha_irs_er", "alpha_irs_ir", "alpha_bs_ir", "alpha_bs_er", "pl0_db", "d0"},
               what);
    Geometry g;
    read_point(j, "bs_position", g.bs_position, what);
    read_point(j, "er_center", g.er_center, what);
    read(j, "er_radius", g.er_radius, what);
    read_point(j, "ir_center", g.ir_center, what);
    read(j, "ir_radius", g.ir_radius, what);
    read_point(j, "irs_position", g.irs_position, what);
    read(j, "alpha_bs_irs", g.alpha_bs_irs, what);
    read(j, "alpha_irs_er", g.alpha_irs_er, what);
    read(j, "alpha_irs_ir", g.alpha_irs_ir, what);
    read(j, "alpha_bs_ir", g.alpha_bs_ir, what);
    read(j, "alpha_bs_er", g.alpha_bs_er, what);
    read(j, "pl0_db", g.pl0_db, what);
    read(j, "d0", g.d0, what);
    g.validate();
    return g;
}

json to_json(const BcdOptions& o) {
    return {{"tolerance", o.tolerance},
            {"max_iterations", o.max_iterations},
            {"precoder_tolerance", o.precoder.tolerance},
            {"precoder_max_iterations", o.precoder.max_iterations},
            {"phase_tolerance", o.phase.tolerance},
            {"phase_max_iterations", o.phase.max_iterations}};
}

BcdOptions bcd_options_from_json(const json& j) {
    static const char* what = "solver";
    check_keys(j,
               {"tolerance", "max_iterations", "precoder_tolerance", "precoder_max_iterations", "phase_tolerance",
                "phase_max_iterations"},
               what);
    BcdOptions o;
    read(j, "tolerance", o.tolerance, what);
    read(j, "max_iterations", o.max_iterations, what);
    read(j, "precoder_tolerance", o.precoder.tolerance, what);
    read(j, "precoder_max_iterations", o.precoder.max_iterations, what);
    read(j, "phase_tolerance", o.phase.tolerance, what);
    read(j, "phase_max_iterations", o.phase.max_iterations, what);
    if (!(o.tolerance > 0.0) || o.max_iterations < 1 || !(o.precoder.tolerance > 0.0) ||
        o.precoder.max_iterations < 1 || !(o.phase.tolerance > 0.0) || o.phase.max_iterations < 1) {
        throw PreconditionError("solver: tolerances must be positive and iteration limits >= 1");
    }
    return o;
}

json to_json(const ExperimentSpec& s) {
    json methods = json::array();
    for (Method m : s.methods) methods.push_back(to_string(m));
    return {{"experiment", s.experiment}, {"sweep", s.sweep},         {"trials", s.trials},
            {"seed_base", s.seed_base},   {"methods", methods},       {"config", to_json(s.config)},
            {"geometry", to_json(s.geometry)}, {"solver", to_json(s.solver)}};
}

ExperimentSpec experiment_spec_from_json(const json& j) {
    static const char* what = "spec";
    check_keys(j, {"experiment", "sweep", "trials", "seed_base", "methods", "config", "geometry", "solver"}, what);
    ExperimentSpec s;
    read(j, "experiment", s.experiment, what);
    read(j, "sweep", s.sweep, what);
    read(j, "trials", s.trials, what);
    read(j, "seed_base", s.seed_base, what);
    if (j.contains("methods")) {
        std::vector<std::string> names;
        read(j, "methods", names, what);
        s.methods.clear();
        for (const auto& n : names) s.methods.push_back(method_from_string(n));
    }
    if (j.contains("config")) s.config = system_config_from_json(j.at("config"));
    if (j.contains("geometry")) s.geometry = geometry_from_json(j.at("geometry"));
    if (j.contains("solver")) s.solver = bcd_options_from_json(j.at("solver"));
    s.validate();
    return s;
}

json to_json(const ScenarioFile& s) {
    return {{"config", to_json(s.config)}, {"geometry", to_json(s.geometry)}, {"seed", s.seed}};
}

ScenarioFile scenario_from_json(const json& j) {
    static const char* what = "scenario";
    check_keys(j, {"config", "geometry", "seed"}, what);
    ScenarioFile s;
    if (j.contains("config")) s.config = system_config_from_json(j.at("config"));
    if (j.contains("geometry")) s.geometry = geometry_from_json(j.at("geometry"));
    read(j, "seed", s.seed, what);
    return s;
}

json to_json(const TrialResult& r, bool include_timing) {
    return {{"experiment", r.experiment},
            {"sweep_value", r.sweep_value},
            {"sweep_index", r.sweep_index},
            {"trial", r.trial},
            {"method", to_string(r.method)},
            {"seed", r.seed},
            {"feasible", r.feasible},
            {"wsr_bits", r.wsr_bits},
            {"q_watts", r.q_watts},
            {"iterations", r.iterations},
            {"wall_time_s", include_timing ? r.wall_time_s : 0.0},
            {"trajectory", r.trajectory},
            {"diagnostic", r.diagnostic}};
}

TrialResult trial_result_from_json(const json& j) {
    static const char* what = "record";
    check_keys(j,
               {"experiment", "sweep_value", "sweep_index", "trial", "method", "seed", "feasible", "wsr_bits",
                "q_watts", "iterations", "wall_time_s", "trajectory", "diagnostic"},
               what);
    TrialResult r;
    read(j, "experiment", r.experiment, what);
    read(j, "sweep_value", r.sweep_value, what);
    read(j, "sweep_index", r.sweep_index, what);
    read(j, "trial", r.trial, what);
    std::string method = to_string(r.method);
    read(j, "method", method, what);
    r.method = method_from_string(method);
    read(j, "seed", r.seed, what);
    read(j, "feasible", r.feasible, what);
    read(j, "wsr_bits", r.wsr_bits, what);
    read(j, "q_watts", r.q_watts, what);
    read(j, "iterations", r.iterations, what);
    read(j, "wall_time_s", r.wall_time_s, what);
    read(j, "trajectory", r.trajectory, what);
    read(j, "diagnostic", r.diagnostic, what);
    return r;
}

json to_json(const PrecoderSet& f) {
    json out = json::array();
    for (const auto& b : f.blocks) out.push_back(matrix(b));
    return out;
}

json to_json(const PhaseVector& phi) {
    json out = json::array();
    for (Eigen::Index m = 0; m < phi.size(); ++m) out.push_back({phi.values(m).real(), phi.values(m).imag()});
    return out;
}

json to_json(const SolveReport& r) {
    json traj = json::array();
    for (const auto& p : r.wsr_trajectory) {
        traj.push_back({{"iteration", p.iteration}, {"wsr_bits", p.wsr_bits}, {"power", p.power}, {"q_watts", p.q_watts}});
    }
    json inner = json::array();
    for (const auto& s : r.inner) {
        inner.push_back({{"precoder_iterations", s.precoder_iterations},
                         {"phase_iterations", s.phase_iterations},
                         {"precoder_failed", s.precoder_failed},
                         {"phase_failed", s.phase_failed}});
    }
    return {{"feasible", r.feasible},
            {"wsr_bits", r.wsr_bits},
            {"q_watts", r.q_watts},
            {"iterations_used", r.iterations_used},
            {"wall_time_s", r.wall_time_s},
            {"wsr_trajectory", traj},
            {"inner", inner},
            {"diagnostic", r.diagnostic},
            {"precoders", to_json(r.f)},
            {"phases", to_json(r.phi)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw PreconditionError("'" + path + "': " + e.what());
    }
}

}  // namespace irs
