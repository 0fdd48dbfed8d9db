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


#ifndef QBANDIT_ORACLES_ORACLES_H
#define QBANDIT_ORACLES_ORACLES_H

#include <cstdint>
#include <vector>

#include "qbandit/oracles/registers.h"
#include "qbandit/oracles/rewards.h"

namespace qbandit::oracles {

/// O_i: flips the reward qubit (Bit) or the sign (Phase) on arm i's block.
SignedPermutation arm_oracle(std::size_t arm, Flip flip, const RegisterSpec &spec);
ComplexMatrix make_arm_oracle(std::size_t arm, Flip flip, const RegisterSpec &spec);

/// O_X = product of O_i over arms with x_i = 1.
SignedPermutation ox_oracle(const std::vector<uint8_t> &x, Flip flip, const RegisterSpec &spec);
ComplexMatrix make_ox(const std::vector<uint8_t> &x, Flip flip, const RegisterSpec &spec);

/// Register for an ERM oracle over `table`: n_omega = table.n_omega().
RegisterSpec erm_register(const RewardTable &table, std::size_t n_work = 1);

/// |i, omega, c> -> |i, omega, c + r_i(omega)>, or a sign (-1)^{r_i(omega)}
/// for Phase.
SignedPermutation erm_oracle(const RewardTable &table, Flip flip = Flip::Bit, std::size_t n_work = 1);
ComplexMatrix make_erm_oracle(const RewardTable &table, Flip flip = Flip::Bit, std::size_t n_work = 1);

/// On arm (x) flag qubit: |i>|0> -> -|i>|1>, |j>|0> -> |j>|1> for j != i.
/// Equal to (phase flip on arm i) (x) X, hence self-adjoint.
SignedPermutation self_indicating_oracle(std::size_t arm, std::size_t n_arms);
ComplexMatrix make_self_indicating_oracle(std::size_t arm, std::size_t n_arms);

/// P_i = |i><i| (x) Id.
ComplexMatrix arm_projector(std::size_t arm, const RegisterSpec &spec);

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_ORACLES_H
