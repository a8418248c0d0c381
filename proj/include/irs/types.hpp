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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace irs {

using cdouble = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// ----- Errors ----------------------------------------------------------------

/// Argument outside the mathematical domain of an operation (negative distance, sigma^2 <= 0, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Caller violated a documented precondition (infeasible starting point, bad dimensions).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A convex or MM subproblem has no usable solution at the current anchor.
class SubproblemInfeasible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ill-conditioned solve or a failed internal search (bracket expansion, eigensolver).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ----- Configuration ---------------------------------------------------------

/// Scalar parameters of the downlink. Powers in watts, rates internally in nats.
struct SystemConfig {
    int n_bs_antennas = 4;   // N_B
    int n_ir_antennas = 2;   // N_I
    int n_er_antennas = 2;   // N_E
    int n_irs = 2;           // K_I, information receivers
    int n_ers = 4;           // K_E, energy receivers
    int n_streams = 2;       // d
    int n_elements = 50;     // M, reflecting elements (0 disables the surface)

    double power_budget = 10.0;   // P_T
    double eh_threshold = 2e-4;   // Q-bar
    double eh_efficiency = 0.5;   // eta
    std::vector<double> rate_weights{1.0, 1.0};          // omega_k
    std::vector<double> eh_weights{1.0, 1.0, 1.0, 1.0};  // alpha_l

    // -160 dBm/Hz over 1 MHz
    double noise_power_ir = 1e-13;
    double noise_power_er = 1e-13;  // carried for completeness; the linear EH model ignores it
    double bandwidth = 1e6;
    double rician_factor = 3.0;
    double antenna_spacing_ratio = 0.5;

    /// Resizes weight vectors to the receiver counts, filling new entries with 1.
    void fill_default_weights();

    /// Throws PreconditionError when any invariant is broken.
    void validate() const;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point2& a, const Point2& b);

/// Planar layout and large-scale path-loss parameters.
struct Geometry {
    Point2 bs_position{0.0, 0.0};
    Point2 er_center{5.0, 0.0};
    double er_radius = 1.0;
    Point2 ir_center{400.0, 0.0};
    double ir_radius = 4.0;
    Point2 irs_position{5.0, 2.0};

    double alpha_bs_irs = 2.2;
    double alpha_irs_er = 2.2;
    double alpha_irs_ir = 2.4;
    double alpha_bs_ir = 3.6;
    double alpha_bs_er = 3.6;

    double pl0_db = -30.0;
    double d0 = 1.0;

    void validate() const;
};

// ----- Channels and optimization variables -----------------------------------

/// Baseband channels of one realization. Matrices with an M dimension are
/// empty-dimension (0 rows or 0 columns) when the surface is absent.
struct ChannelSet {
    CMat z;                  // M x N_B, BS -> IRS
    std::vector<CMat> h_b;   // N_I x N_B per IR, BS -> IR
    std::vector<CMat> h_r;   // N_I x M per IR, IRS -> IR
    std::vector<CMat> g_b;   // N_E x N_B per ER, BS -> ER
    std::vector<CMat> g_r;   // N_E x M per ER, IRS -> ER

    int n_elements() const { return static_cast<int>(z.rows()); }

    /// Throws PreconditionError if any dimension disagrees with the config or an entry is not finite.
    void validate(const SystemConfig& config) const;

    /// Same direct links with the surface removed (M = 0).
    ChannelSet without_surface() const;
};

/// Transmit precoders F_k, one N_B x d block per information receiver.
struct PrecoderSet {
    std::vector<CMat> blocks;

    std::size_t size() const { return blocks.size(); }
    const CMat& operator[](std::size_t k) const { return blocks[k]; }
    CMat& operator[](std::size_t k) { return blocks[k]; }

    double total_power() const;
    static PrecoderSet zeros(const SystemConfig& config);
};

/// Reflection coefficients phi_m; unit modulus is maintained by every producer in this library.
struct PhaseVector {
    CVec values;

    Eigen::Index size() const { return values.size(); }

    static PhaseVector ones(int m);
    static PhaseVector from_angles(const Eigen::VectorXd& theta);

    /// Largest | |phi_m| - 1 | over the vector.
    double modulus_error() const;
};

/// WMMSE auxiliaries: decoders U_k (N_I x d) and weights W_k (d x d, Hermitian PD).
struct AuxState {
    std::vector<CMat> u;
    std::vector<CMat> w;
};

}  // namespace irs
