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

#ifndef QBANDIT_QMAT_RANDOM_H
#define QBANDIT_QMAT_RANDOM_H

#include <cstddef>
#include <vector>

#include "qbandit/common/rng.h"
#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/states.h"

namespace qbandit::qmat {

/// Complex Gaussian vector, normalized.
PureState random_pure(std::size_t dim, Rng &rng);

/// G G^dagger / Tr, with G a dim x rank complex Gaussian matrix.
/// rank = 0 picks a uniform rank in [1, dim].
DensityMatrix random_density(std::size_t dim, Rng &rng, std::size_t rank = 0);

/// Gram-Schmidt of a complex Gaussian matrix with phase fixing.
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);

/// V D V^dagger with D = diag(+-1); self-adjoint and unitary.
/// minus_count = -1 picks a uniform count in [0, dim].
ComplexMatrix random_involution(std::size_t dim, Rng &rng, int minus_count = -1);

/// Random Hermitian matrix with Gaussian entries.
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);

/// Kraus set {A_k} with sum A_k^dagger A_k = Id, from an isometry.
std::vector<ComplexMatrix> random_kraus(std::size_t dim, std::size_t count, Rng &rng);

/// Probability vector from normalized exponential draws.
std::vector<double> random_simplex(std::size_t n, Rng &rng);

}  // namespace qbandit::qmat

#endif  // QBANDIT_QMAT_RANDOM_H
