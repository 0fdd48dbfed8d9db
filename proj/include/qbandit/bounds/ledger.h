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


#ifndef QBANDIT_BOUNDS_LEDGER_H
#define QBANDIT_BOUNDS_LEDGER_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qbandit/oracles/rewards.h"

namespace qbandit::bounds {

using oracles::RewardFamily;
using oracles::RewardVector;

struct Pull {
    std::size_t arm = 1;  // 1-based
    int reward = 0;
};

using PullHistory = std::vector<Pull>;

/// Deterministic arm choice a_t(z_{t-1}).
using Policy = std::function<std::size_t(const PullHistory &)>;

Policy round_robin_policy(std::size_t n_arms);
/// Unpulled arms first, then the best empirical mean; ties to the lowest index.
Policy greedy_policy(std::size_t n_arms);
Policy fixed_arm_policy(std::size_t arm);
/// Arm from a SplitMix64 hash of the history and `salt`.
Policy hashed_policy(std::size_t n_arms, uint64_t salt);
/// "round-robin", "greedy", "fixed:<arm>" or "hash". Throws "unknown policy".
Policy make_policy(const std::string &name, std::size_t n_arms, uint64_t salt = 0);

/// Final-level entry: joint weight sqrt(P^j(z) P^0(z)), decay factor
/// d^j(z) = (1 - Delta^2 / (4 eta (1 - eta)))^{n_j(z)} and pull count n_j(z).
struct LedgerRow {
    PullHistory history;
    double weight = 0.0;
    double decay = 1.0;
    std::size_t pulls = 0;
};

struct LedgerStep {
    std::size_t t = 0;
    double sqrt_fidelity = 1.0;  // sqrt F(Z_t^j, Z_t^0)
    double pull_mass = 0.0;      // sum_{z_{t-1}} sqrt(PP) 1[a_t = j]
    double decayed_mass = 0.0;   // same with factor d(z_{t-1})
    double decayed_mass_sq = 0.0;  // same with factor d(z_{t-1})^2
    double pull_prob0 = 0.0;     // P^0(A_t = j)
    double recursion_margin = 0.0;
};

struct LedgerOptions {
    bool monte_carlo = false;
    std::size_t samples = 100000;
    uint64_t seed = 1;
};

struct LedgerReport {
    std::size_t arm = 0;
    std::size_t T = 0;
    bool exact = true;
    bool geom_skipped = false;
    std::string notice;
    double kappa = 0.0;  // Delta^2 / (4 eta (1 - eta))
    std::vector<LedgerStep> steps;
    std::vector<LedgerRow> rows;  // exact mode only
    double final_sqrt_fidelity = 1.0;
    double delta_eff = 0.0;  // 2 sqrt(delta (1 - delta)) = final_sqrt_fidelity
    double min_recursion_margin = 0.0;
    double min_geom_margin = 0.0;        // 1/kappa - sum_t d^2 1[a_t = j], per history
    double telescope_margin = 0.0;       // sum sqrt(PP) d(z_T) - (1 - 2 kappa sum_t decayed_mass)
    double chain_margin = 0.0;           // sum_t decayed_mass_sq - (1 - sqrt F_T) / (2 kappa)
    double chain_margin_linear = 0.0;    // sum_t decayed_mass - (1 - sqrt F_T) / (2 kappa)
    double cauchy_schwarz_margin = 0.0;  // sqrt(sum_t P^0(A_t=j)) / sqrt(kappa) - sum_t decayed_mass
};

/// Transcript laws of `policy` under `base` and `alt`, which differ only at
/// `arm`. Exact enumeration needs T <= 16 and N <= 4; beyond that
/// `monte_carlo` estimates every sum by importance sampling under `base`,
/// otherwise throws "ledger cap exceeded".
LedgerReport classical_ledger(const RewardVector &base, const RewardVector &alt, std::size_t arm, double eta,
                              const Policy &policy, std::size_t T, const LedgerOptions &options = {});

/// base = member 0, alt = member `arm` of the family.
LedgerReport classical_ledger(const RewardFamily &family, std::size_t arm, const Policy &policy, std::size_t T,
                              const LedgerOptions &options = {});

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_LEDGER_H
