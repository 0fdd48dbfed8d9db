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


#ifndef QBANDIT_ALGORITHMS_AMPLITUDE_ESTIMATION_H
#define QBANDIT_ALGORITHMS_AMPLITUDE_ESTIMATION_H

#include <array>
#include <cstdint>
#include <vector>

#include "qbandit/algorithms/result.h"
#include "qbandit/common/rng.h"

namespace qbandit::algorithms {

/// Smallest M = 2^m with pi / M + pi^2 / M^2 <= eps.
std::size_t ae_resolution(double eps);

/// Oracle calls for resolution M: one preparation plus 2 per Grover power.
std::size_t ae_queries(std::size_t m_resolution);

/// Probability of each phase-register outcome y in [0, M) when the
/// reward-one amplitude is sqrt(p).
std::vector<double> ae_outcome_distribution(double p, std::size_t m_resolution);

/// sin^2(pi y / M).
double ae_estimate_from_outcome(std::size_t y, std::size_t m_resolution);

struct MeanEstimate {
    double estimate = 0.0;
    std::size_t queries = 0;
    std::size_t resolution = 0;
    std::size_t outcome = 0;
};

/// Amplitude estimation of the reward-one branch of the uniform-omega ERM
/// query on `arm`.
MeanEstimate erm_mean_estimate(std::size_t arm, const RewardTable &table, double eps, Rng &rng);
MeanEstimate erm_mean_estimate(double p, double eps, Rng &rng);

/// Eigenphases of the Grover operator -A S_0 A^dagger S_good restricted to
/// span{A|i, 0, 0>}, built from the explicit ERM oracle. Should be +-2 theta
/// with sin^2 theta = p_i.
std::array<double, 2> erm_grover_eigenphases(std::size_t arm, const RewardTable &table);

/// Estimates every arm to accuracy gap / 2 and returns the argmax.
RunResult erm_best_arm(const BanditInstance &instance, double gap, uint64_t seed);

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_AMPLITUDE_ESTIMATION_H
