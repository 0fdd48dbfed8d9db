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

#ifndef QBANDIT_QMAT_STATES_H
#define QBANDIT_QMAT_STATES_H

#include "qbandit/qmat/matrix.h"

namespace qbandit::qmat {

/// Unit vector. Construction checks the norm against tolerances().state_norm.
class PureState {
   public:
    explicit PureState(CVector amplitudes);
    /// Rescales to unit norm. Throws on a zero vector.
    static PureState normalized(CVector amplitudes);
    static PureState basis(std::size_t dim, std::size_t index);
    static PureState uniform(std::size_t dim);

    std::size_t dim() const { return amps_.size(); }
    const CVector &amplitudes() const { return amps_; }

   private:
    CVector amps_;
};

/// Hermitian, unit-trace matrix.
///
/// The constructor checks the Hermitian defect and the trace and stores the
/// Hermitian part. The spectrum check is separate (`checked`) since it costs
/// an eigendecomposition.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix mat);
    /// Also requires the minimum eigenvalue to be >= -tolerances().eig_clamp.
    static DensityMatrix checked(ComplexMatrix mat);
    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix &mat() const { return mat_; }
    double min_eigenvalue() const;

   private:
    ComplexMatrix mat_;
};

}  // namespace qbandit::qmat

#endif  // QBANDIT_QMAT_STATES_H
