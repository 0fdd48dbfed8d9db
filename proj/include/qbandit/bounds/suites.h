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


#ifndef QBANDIT_BOUNDS_SUITES_H
#define QBANDIT_BOUNDS_SUITES_H

#include <cstdint>
#include <string>
#include <vector>

#include "qbandit/bounds/report.h"
#include "qbandit/common/rng.h"
#include "qbandit/oracles/rewards.h"

namespace qbandit::bounds {

struct SuiteOptions {
    std::size_t trials = 0;  // 0 picks the suite default
    uint64_t seed = 1;
};

/// distance, scalar-lemmas, fidelity-lemma, coupling, history, ledger,
/// purity, all.
const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);
std::size_t default_trials(const std::string &suite);

/// Runs a randomized sweep and returns one summary per check, verdicts at
/// the per-check default tolerances. Instance k draws from
/// Rng(instance_seed(seed, k)), which is the reported worst_seed.
/// Throws "unknown suite".
std::vector<CheckSummary> run_suite(const std::string &name, const SuiteOptions &options);

uint64_t instance_seed(uint64_t seed, std::size_t k);

/// Family (p_0, ..., p_N) inside [eta, 1 - eta] with max Delta^2 / eta <= 1/2.
oracles::RewardFamily random_family(std::size_t n_arms, Rng &rng);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_SUITES_H
