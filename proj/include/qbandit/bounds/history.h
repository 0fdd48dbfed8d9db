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


#ifndef QBANDIT_BOUNDS_HISTORY_H
#define QBANDIT_BOUNDS_HISTORY_H

#include <cstdint>
#include <vector>

#include "qbandit/oracles/registers.h"
#include "qbandit/oracles/rewards.h"
#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/states.h"

namespace qbandit::bounds {

using oracles::Flip;
using oracles::RegisterSpec;
using oracles::RewardFamily;
using qmat::ComplexMatrix;
using qmat::CVector;
using qmat::PureState;

/// One reward history z_t = (x_1, ..., x_t), x_s in {0,1}^N, with the states
/// and weights of both decompositions.
struct HistoryNode {
    std::vector<std::vector<uint8_t>> z;
    double p_weight = 1.0;  // P^i(z_t)
    double q_weight = 1.0;  // Q^i(z_t)
    ComplexMatrix rho;      // rho(z_t)
    CVector psi;            // psi(z_t)
};

struct HistoryLevel {
    std::size_t t = 0;
    std::vector<HistoryNode> nodes;
    double p_sum = 0.0;
    double q_sum = 0.0;
    double min_weight = 0.0;
    double mixed_residual = 0.0;  // ||sum P rho(z_t) - rho_t^i||_tr
    double pure_residual = 0.0;   // ||sum Q |psi(z_t)><psi(z_t)| - rho_t^0||_tr
};

/// Per-branch purity bookkeeping for the transition z_t -> (z_t, x_{t+1}),
/// with X = tr(rho~ - O rho~ O^dagger)^2 and drop = R(z_t) - R(z_{t+1}).
struct BranchPurity {
    double identity_residual = 0.0;  // |drop - c(1-c) X|, c the branch mixing weight
    double stated_margin = 0.0;      // drop / (2 Delta^2) - X
    double derived_margin = 0.0;     // 2 drop / Delta^2 - X
};

struct HistoryDecomposition {
    std::size_t arm = 0;
    std::size_t T = 0;
    std::vector<HistoryLevel> levels;  // t = 0..T
    std::vector<BranchPurity> branches;
    double max_sum_defect = 0.0;
    double min_weight = 0.0;
    double max_mixed_residual = 0.0;
    double max_pure_residual = 0.0;
    double max_identity_residual = 0.0;
    double min_stated_margin = 0.0;
    double min_derived_margin = 0.0;
};

/// Splits rho_t^i (one-time oracle of family member `arm`) into
/// perturbed reward branches and rho_t^0 into pure coupled branches, for the
/// circuit U_1, E, U_2, E, ..., U_T, E. Throws "history cap exceeded" unless
/// T <= 4 and N <= 3, and "gap condition violated" unless
/// max Delta^2 / eta <= 1/2 and the base lies in [eta, 1 - eta].
HistoryDecomposition build_history_decomposition(const RewardFamily &family, std::size_t arm,
                                                 const std::vector<ComplexMatrix> &unitaries,
                                                 const PureState &initial, Flip flip, const RegisterSpec &spec);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_HISTORY_H
