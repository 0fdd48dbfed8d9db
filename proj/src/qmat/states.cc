// Copyright 2026 The qbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbandit/qmat/states.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qbandit/common/tolerances.h"
#include "qbandit/qmat/eig.h"

namespace qbandit::qmat {

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
    const double n = norm(amps_);
    if (std::abs(n - 1.0) > tolerances().state_norm) {
        throw std::invalid_argument("pure state norm " + std::to_string(n) + " differs from 1");
    }
}

PureState PureState::normalized(CVector amplitudes) {
    const double n = norm(amplitudes);
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return PureState(scaled(amplitudes, 1.0 / n));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    return PureState(basis_vector(dim, index));
}

PureState PureState::uniform(std::size_t dim) {
    return PureState(CVector(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)))));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) {
    if (!mat.is_square()) {
        throw std::invalid_argument("dim mismatch: density matrix must be square");
    }
    const double defect = mat.hermitian_defect();
    if (defect > tolerances().hermitian_state) {
        throw std::invalid_argument("density matrix not hermitian: defect " + std::to_string(defect));
    }
    const cplx tr = mat.trace();
    if (std::abs(tr - 1.0) > tolerances().trace) {
        throw std::invalid_argument("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
    }
    mat_ = hermitian_part(mat);
}

DensityMatrix DensityMatrix::checked(ComplexMatrix mat) {
    DensityMatrix d(std::move(mat));
    const double lo = d.min_eigenvalue();
    if (lo < -tolerances().eig_clamp) {
        throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(lo));
    }
    return d;
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(ComplexMatrix::diag_real(std::vector<double>(dim, 1.0 / static_cast<double>(dim))));
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eig(mat_).values.front();
}

}  // namespace qbandit::qmat
