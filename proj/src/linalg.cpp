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

#include "irs/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace irs::linalg {

CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

namespace {

Eigen::LLT<CMat> factor_hpd(const CMat& a, double max_condition) {
    Eigen::LLT<CMat> llt(hermitian_part(a));
    if (llt.info() != Eigen::Success) {
        throw NumericalError("Hermitian solve: matrix is not positive definite");
    }
    const double rc = llt.rcond();
    if (!(rc * max_condition >= 1.0)) {
        throw NumericalError("Hermitian solve: condition estimate " + std::to_string(1.0 / rc) +
                             " exceeds limit");
    }
    return llt;
}

}  // namespace

CMat solve_hpd(const CMat& a, const CMat& b, double max_condition) {
    if (a.rows() == 0) return CMat(0, b.cols());
    return factor_hpd(a, max_condition).solve(b);
}

CMat inverse_hpd(const CMat& a, double max_condition) {
    const CMat id = CMat::Identity(a.rows(), a.cols());
    return hermitian_part(solve_hpd(a, id, max_condition));
}

double log_det_hpd(const CMat& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::LLT<CMat> llt(hermitian_part(a));
    if (llt.info() != Eigen::Success) {
        throw DomainError("log-determinant of a matrix that is not positive definite");
    }
    double acc = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log(std::real(l(i, i)));
    return 2.0 * acc;
}

std::pair<double, CVec> max_eigenpair(const CMat& herm) {
    if (herm.rows() == 0) return {0.0, CVec()};
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(herm));
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
    const Eigen::Index last = herm.rows() - 1;
    return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

double max_eigenvalue(const CMat& herm) {
    if (herm.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(herm), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
    return es.eigenvalues()(herm.rows() - 1);
}

double min_eigenvalue(const CMat& herm) {
    if (herm.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(herm), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
    return es.eigenvalues()(0);
}

CVec unit_phase(const CVec& x) {
    CVec out(x.size());
    for (Eigen::Index m = 0; m < x.size(); ++m) {
        out(m) = (x(m) == cdouble(0.0, 0.0)) ? cdouble(1.0, 0.0) : std::polar(1.0, std::arg(x(m)));
    }
    return out;
}

double real_inner(const CMat& a, const CMat& b) {
    return (a.conjugate().cwiseProduct(b)).sum().real();
}

}  // namespace irs::linalg
