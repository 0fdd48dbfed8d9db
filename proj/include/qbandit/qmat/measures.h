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

#ifndef QBANDIT_QMAT_MEASURES_H
#define QBANDIT_QMAT_MEASURES_H

#include <cstddef>
#include <vector>

#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/states.h"

namespace qbandit::qmat {

/// Root fidelity ||sqrt(a) sqrt(b)||_tr of two PSD matrices (any trace).
/// Takes <v|b|v> when a or b is rank one to tolerances().pure_fast_path.
double sqrt_fidelity_psd(const ComplexMatrix &a, const ComplexMatrix &b);

/// F = (||sqrt(rho) sqrt(sigma)||_tr)^2. Throws "dim mismatch".
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);
double fidelity(const PureState &psi, const DensityMatrix &sigma);
double sqrt_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Half the sum of absolute eigenvalues of rho - sigma.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);
double trace_norm_hermitian(const ComplexMatrix &h);

double purity(const DensityMatrix &rho);
double purity(const ComplexMatrix &rho);

/// Partial trace over the subsystems not listed in `keep`.
/// `dims` lists subsystem sizes, slowest index first. Throws
/// "bad subsystem spec" when dims do not multiply to the matrix size or keep
/// is not a strictly increasing list of valid subsystem positions.
ComplexMatrix partial_trace(const ComplexMatrix &op, const std::vector<std::size_t> &dims,
                            const std::vector<std::size_t> &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::size_t> &dims,
                            const std::vector<std::size_t> &keep);

/// Optimal two-state discrimination probability, 1/2 + T/2.
double helstrom_success(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace qbandit::qmat

#endif  // QBANDIT_QMAT_MEASURES_H
