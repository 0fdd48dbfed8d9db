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

#ifndef QBANDIT_QMAT_EIG_H
#define QBANDIT_QMAT_EIG_H

#include <functional>
#include <vector>

#include "qbandit/qmat/matrix.h"

namespace qbandit::qmat {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws "hermitian check failed" when the input is
/// not Hermitian to tolerances().hermitian_input.
EigenDecomposition hermitian_eig(const ComplexMatrix &h);

/// Maps an eigenvalue of a PSD matrix to [0, inf): values in
/// [-eig_clamp, 0) become 0, more negative values throw.
double clamp_psd_eigenvalue(double lambda);

/// V f(D) V^dagger.
ComplexMatrix spectral_apply(const EigenDecomposition &e, const std::function<double(double)> &f);

/// Square root of a PSD matrix with eigenvalue clamping.
ComplexMatrix psd_sqrt(const ComplexMatrix &h);

/// A with h = A A^dagger, built as V sqrt(D) over eigenvalues above
/// `cutoff` times the largest one (clamping applied first).
ComplexMatrix psd_factor(const ComplexMatrix &h, double cutoff = 1e-14);

/// Singular values by one-sided (Hestenes) Jacobi, descending.
std::vector<double> singular_values(const ComplexMatrix &m);

}  // namespace qbandit::qmat

#endif  // QBANDIT_QMAT_EIG_H
