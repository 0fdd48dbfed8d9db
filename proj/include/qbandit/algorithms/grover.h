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


#ifndef QBANDIT_ALGORITHMS_GROVER_H
#define QBANDIT_ALGORITHMS_GROVER_H

#include <cstdint>
#include <vector>

#include "qbandit/algorithms/result.h"
#include "qbandit/qmat/matrix.h"

namespace qbandit::algorithms {

using qmat::ComplexMatrix;

struct FaultyGroverPlan {
    std::size_t n_arms = 0;
    double p = 1.0;
    double theta = 0.0;  // 2 arcsin(N^{-1/2})
    std::size_t T = 0;   // floor(pi / (2 theta p))
};

/// Throws "oracle never fires" for p = 0.
FaultyGroverPlan make_plan(std::size_t n_arms, double p);

/// Bin(T, p) probability mass, k = 0..T.
std::vector<double> binomial_pmf(std::size_t T, double p);

/// sum_k Bin(T, p)(k) sin^2((2k + 1) theta / 2).
double selfflag_success_probability(std::size_t n_arms, double p, std::size_t T);

/// Arm-register density matrix sum_k Bin(T, p)(k) |G^k s><G^k s| built from
/// explicit Grover iterates.
ComplexMatrix selfflag_reduced_state(std::size_t n_arms, double p, std::size_t target, std::size_t T);

/// Same state from the full input (x) flag (x) T-ancilla register, traced down
/// to the input. Dimension 2 N 2^T.
ComplexMatrix selfflag_full_register_state(std::size_t n_arms, double p, std::size_t target, std::size_t T);

/// Runs the plan and samples a measurement of the arm register.
RunResult faulty_grover_self_indicating(std::size_t n_arms, double p, std::size_t target, uint64_t seed);

/// Success probability after T standard Grover iterations in which every
/// oracle call is the phase-flip channel F_i^p.
double grover_under_faulty_channel(std::size_t n_arms, double p, std::size_t target, std::size_t T);

/// Success probabilities for T = 0..t_max.
std::vector<double> grover_channel_sweep(std::size_t n_arms, double p, std::size_t t_max);

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_GROVER_H
