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


#ifndef QBANDIT_ALGORITHMS_BANDITS_H
#define QBANDIT_ALGORITHMS_BANDITS_H

#include <cstdint>
#include <functional>

#include "qbandit/algorithms/result.h"
#include "qbandit/common/rng.h"

namespace qbandit::algorithms {

/// sqrt(ln(c N t^2 / delta) / (2 t)) with c = 4.
double elimination_radius(std::size_t n_arms, std::size_t t, double delta);

/// Successive elimination over an arbitrary pull source; pull(arm) returns
/// the reward of one pull of a 1-based arm.
RunResult successive_elimination(std::size_t n_arms, double delta, const std::function<int(std::size_t)> &pull,
                                 std::size_t best_arm);

/// Bernoulli pulls drawn directly from the means.
RunResult classical_successive_elimination(const BanditInstance &instance, uint64_t seed);

/// Each pull is one call of the one-time channel on |i, 0> followed by a
/// measurement of the reward qubit; outcome probabilities come from the
/// exact simulator.
RunResult onetime_successive_elimination(const BanditInstance &instance, uint64_t seed);

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_BANDITS_H
