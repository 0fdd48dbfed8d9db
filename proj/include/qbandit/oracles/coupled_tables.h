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


#ifndef QBANDIT_ORACLES_COUPLED_TABLES_H
#define QBANDIT_ORACLES_COUPLED_TABLES_H

#include "qbandit/common/rng.h"
#include "qbandit/oracles/registers.h"
#include "qbandit/oracles/rewards.h"

namespace qbandit::oracles {

struct CoupledTables {
    RewardTable r0;  // means p^0
    RewardTable ri;  // means p^i
};

/// Quantile coupling: for each arm j draw u_j(omega) i.i.d. uniform and set
/// the bit to 1 on the k smallest draws, k = mean * M. Arm i uses the same
/// draws in both tables with k = p_i M for r0 and p_0 M for ri, so r0 <= ri
/// and the other rows agree. Throws "table size incompatible with means".
CoupledTables sample_coupled_tables(const RewardFamily &family, std::size_t arm, std::size_t n_omega, Rng &rng);

/// Diagonal projector onto |j, omega, c, w> with r_a_j(omega) != r_b_j(omega).
ComplexMatrix disagreement_projector(const RewardTable &a, const RewardTable &b, std::size_t n_work = 1);

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_COUPLED_TABLES_H
