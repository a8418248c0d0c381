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

#include <utility>

namespace irs::linalg {

/// Largest condition number accepted by the Hermitian solves below.
inline constexpr double kMaxCondition = 1e12;

/// (a + a^H) / 2
CMat hermitian_part(const CMat& a);

/// Solves a x = b for Hermitian positive definite a via Cholesky.
/// Throws NumericalError if a is not PD or its estimated condition exceeds max_condition.
CMat solve_hpd(const CMat& a, const CMat& b, double max_condition = kMaxCondition);

/// Inverse of a Hermitian PD matrix, Hermitian-symmetrized.
CMat inverse_hpd(const CMat& a, double max_condition = kMaxCondition);

/// log|a| for Hermitian PD a. Throws DomainError when a is not PD.
double log_det_hpd(const CMat& a);

/// Largest eigenvalue and a unit eigenvector of a Hermitian matrix.
std::pair<double, CVec> max_eigenpair(const CMat& herm);

double max_eigenvalue(const CMat& herm);
double min_eigenvalue(const CMat& herm);

/// Entrywise exp(j arg(x_m)), with arg(0) taken as 0.
CVec unit_phase(const CVec& x);

/// Re tr(a^H b), the real Frobenius inner product.
double real_inner(const CMat& a, const CMat& b);

}  // namespace irs::linalg
