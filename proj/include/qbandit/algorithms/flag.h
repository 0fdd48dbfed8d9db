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


#ifndef QBANDIT_ALGORITHMS_FLAG_H
#define QBANDIT_ALGORITHMS_FLAG_H

#include <cstdint>
#include <vector>

#include "qbandit/common/rng.h"
#include "qbandit/simulator/oracle_model.h"

namespace qbandit::algorithms {

/// ceil(2 eps^-2 ln(n / delta)); eps is clamped to 1 since rewards lie in
/// [0, 1].
std::size_t hoeffding_k(double eps, double delta, std::size_t n_arms);

/// 1 iff sum < k (l - 3 eps / 2).
int flag_from_sum(std::size_t sum, std::size_t k, double l, double eps);

struct FlagResult {
    int flag = 0;
    std::size_t queries = 0;
    std::size_t k = 0;
    std::size_t sum = 0;
};

/// Sums x_t^i over the first k rounds of a reusable oracle, compares, then
/// uncomputes: 2k calls. Throws "reusable sample exhausted" if the oracle
/// has fewer than k rounds.
FlagResult hoeffding_flag(std::size_t arm, const simulator::OracleModel &oracle, double l, double eps, double delta,
                          std::size_t n_arms);

/// Lazily drawn reusable rounds X_1, X_2, ... with prefix sums per arm.
class RewardStream {
   public:
    RewardStream(std::vector<double> means, Rng rng);

    std::size_t n_arms() const { return means_.size(); }
    std::size_t rounds() const { return rounds_; }
    /// Draws rounds up to k.
    void ensure(std::size_t k);
    /// sum_{t <= k} x_t^i for every arm (0-based index).
    std::vector<std::size_t> sums(std::size_t k);

   private:
    std::vector<double> means_;
    Rng rng_;
    std::size_t rounds_ = 0;
    // prefix_[i][t] = sum of the first t bits of arm i
    std::vector<std::vector<uint32_t>> prefix_;
};

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_FLAG_H
