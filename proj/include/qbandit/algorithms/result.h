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


#ifndef QBANDIT_ALGORITHMS_RESULT_H
#define QBANDIT_ALGORITHMS_RESULT_H

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbandit/oracles/rewards.h"
#include "qbandit/simulator/oracle_model.h"

namespace qbandit::algorithms {

using oracles::RewardTable;
using oracles::RewardVector;
using simulator::OracleKind;

/// Fixed-confidence best-arm problem. Rejects tied maxima and delta outside
/// (0, 1/2).
struct BanditInstance {
    RewardVector rewards;
    double delta;
    OracleKind kind;

    BanditInstance(RewardVector p, double delta_, OracleKind kind_ = OracleKind::OneTimeChannel)
        : rewards(std::move(p)), delta(delta_), kind(kind_) {
        if (!(delta > 0.0 && delta < 0.5)) {
            throw std::invalid_argument("delta outside (0, 1/2)");
        }
        rewards.best_arm();
    }

    std::size_t n_arms() const { return rewards.n_arms(); }
    std::size_t best_arm() const { return rewards.best_arm(); }
};

struct RunResult {
    std::size_t chosen_arm = 1;
    std::size_t queries = 0;
    bool success = false;
    /// Pull counts (classical) or arm-register weights (quantum).
    std::vector<double> weights;
    /// Exact probability of returning the right arm when it is known.
    double success_probability = std::numeric_limits<double>::quiet_NaN();
    std::string message;
};

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_RESULT_H
